//! Reference path coefficients at `psi0 = 1`.
//! Each entry lists the box path (after the origin) as `(x, y, z)` and the coefficient
//! as a rational function of `h1, h2, h3`.

#![allow(dead_code)]

pub type PathEntry = (&'static [(u32, u32, u32)], &'static str);

/// Denominator shared by the `J[[1,1]] x J[[1],[1]]` expansion.
pub const LR_DEN: &str = "(h1-h2)*(h1-h3)*(h2-h1)*(h2-h3)";

/// `J[[1,1]] x J[[1],[1]]`: shape, paths with numerators over `LR_DEN` (times 3 when `third`).
pub struct LrShape {
    pub name: &'static str,
    pub heights: &'static str,
    pub third: bool,
    pub paths: &'static [PathEntry],
}

pub const LR_SHAPES: &[LrShape] = &[
    LrShape {
        name: "y-column",
        heights: "[[1,1,1,1]]",
        third: false,
        paths: &[(&[(0, 1, 0), (0, 2, 0), (0, 3, 0)], "-4*h1^2*(1+h1*h3)*(1+h1*h2)")],
    },
    LrShape {
        name: "x-column",
        heights: "[[1],[1],[1],[1]]",
        third: false,
        paths: &[(&[(1, 0, 0), (2, 0, 0), (3, 0, 0)], "-4*h2^2*(1+h2*h3)*(1+h1*h2)")],
    },
    LrShape {
        name: "yyx",
        heights: "[[1,1,1],[1]]",
        third: true,
        paths: &[
            (&[(0, 1, 0), (0, 2, 0), (1, 0, 0)], "-4*h1^2*(1+h1*h3)*(3+h2^2)"),
            (&[(0, 1, 0), (1, 0, 0), (0, 2, 0)], "-2*h1^2*(1+h1*h3)*(9*h1*h2-12*h1^2+2*h1^2*h2^2)"),
            (
                &[(1, 0, 0), (0, 1, 0), (0, 2, 0)],
                "4*h1^4*h2^2+4*h1^3*h2^3-15*h1^3*h2+8*h1^2*h2^2-3*h1*h2^3-6*h2^4-12*h1^2+18*h1*h2",
            ),
        ],
    },
    LrShape {
        name: "yyz",
        heights: "[[2,1,1]]",
        third: true,
        paths: &[
            (&[(0, 1, 0), (0, 2, 0), (0, 0, 1)], "-4*h1^2*(1+h1*h3)*(3+h2*h3)"),
            (&[(0, 1, 0), (0, 0, 1), (0, 2, 0)], "-2*(1+h1*h3)*(9*h1*h3-12*h1^2+2*h1^2*h2*h3)"),
            (&[(0, 0, 1), (0, 1, 0), (0, 2, 0)], "-2*(1+h1*h3)*(6*h1^2-9*h1*h3+2*h1^2*h2*h3)"),
        ],
    },
    LrShape {
        name: "yzy",
        heights: "[[2,2]]",
        third: true,
        paths: &[
            (&[(0, 1, 0), (0, 0, 1), (0, 1, 1)], "-2*(h1*h3+1)*(h1^2*h3+h1*h3^2-6*h1^2+3*h3^2)"),
            (&[(0, 0, 1), (0, 1, 0), (0, 1, 1)], "-2*(h1*h3+1)*(h1^2*h3+h1*h3^2+3*h1^2-6*h3^2)"),
        ],
    },
    LrShape {
        name: "yxy",
        heights: "[[1,1],[1,1]]",
        third: true,
        paths: &[
            (&[(0, 1, 0), (1, 0, 0), (1, 1, 0)], "-2*(h1*h3+1)*(h1^2*h2+h1*h2^2-6*h1^2+3*h2^2)"),
            (
                &[(1, 0, 0), (0, 1, 0), (1, 1, 0)],
                "-2*h3*(h1^3*h2+h1^2*h2^2+3*h1^3-6*h1*h2^2-h1*h2-3*h1+6*h2)",
            ),
        ],
    },
    LrShape {
        name: "xzx",
        heights: "[[2],[2]]",
        third: true,
        paths: &[
            (
                &[(1, 0, 0), (0, 0, 1), (1, 0, 1)],
                "2*h1*(h1^3*h2+2*h1^2*h2^2+h1*h2^3+3*h1^3+9*h1^2*h2+3*h1*h2^2-3*h2^3-h1*h2-h2^2-3*h1-9*h2)",
            ),
            (&[(0, 0, 1), (1, 0, 0), (1, 0, 1)], "-2*(h1*h3+1)*(h2^2*h3+h2*h3^2+3*h2^2-6*h3^2)"),
        ],
    },
    LrShape {
        name: "z-column",
        heights: "[[4]]",
        third: false,
        paths: &[(&[(0, 0, 1), (0, 0, 2), (0, 0, 3)], "-4*h3^2*(1+h1*h3)*(1+h2*h3)")],
    },
    LrShape {
        name: "xzz",
        heights: "[[3],[1]]",
        third: true,
        paths: &[
            (&[(0, 0, 1), (0, 0, 2), (1, 0, 0)], "-4*(h1*h3+1)*h3^2*(h2^2+3)"),
            (&[(0, 0, 1), (1, 0, 0), (0, 0, 2)], "-2*(h1*h3+1)*h3*(2*h2^2*h3+9*h2-12*h3)"),
            (
                &[(1, 0, 0), (0, 0, 1), (0, 0, 2)],
                "-2*h3*(2*h1*h2^2*h3^2-6*h1*h2*h3+3*h1*h3^2-h2^2*h3+3*h2*h3^2-9*h2+6*h3)",
            ),
        ],
    },
    LrShape {
        name: "yzz",
        heights: "[[3,1]]",
        third: true,
        paths: &[
            (&[(0, 0, 1), (0, 0, 2), (0, 1, 0)], "-4*(h1*h3+1)*h3^2*(h1*h2+3)"),
            (&[(0, 0, 1), (0, 1, 0), (0, 0, 2)], "-2*(h1*h3+1)*h3*(2*h1*h2*h3+9*h1-12*h3)"),
            (&[(0, 1, 0), (0, 0, 1), (0, 0, 2)], "-2*(h1*h3+1)*h3*(2*h1*h2*h3-9*h1+6*h3)"),
        ],
    },
    // The second path is printed as a repeat of the first; read as (h2, h1, 2h2).
    LrShape {
        name: "yxx",
        heights: "[[1,1],[1],[1]]",
        third: true,
        paths: &[
            (
                &[(1, 0, 0), (2, 0, 0), (0, 1, 0)],
                "4*h1^3*h2^3+4*h1^2*h2^4-6*h1^4+3*h1^3*h2+48*h1^2*h2^2+5*h1*h2^3-30*h2^4-12*h2^2",
            ),
            (
                &[(1, 0, 0), (0, 1, 0), (2, 0, 0)],
                "4*h1^3*h2^3+4*h1^2*h2^4+6*h1^4+21*h1^3*h2-30*h1^2*h2^2-31*h1*h2^3+18*h2^4-18*h1*h2+24*h2^2",
            ),
            (&[(0, 1, 0), (1, 0, 0), (2, 0, 0)], "-2*(h1*h3+1)*h2*(2*h1*h2^2-9*h1+6*h2)"),
        ],
    },
    // The third path is printed as a repeat of the second; read as (h3, h2, 2h2).
    LrShape {
        name: "xxz",
        heights: "[[2],[1],[1]]",
        third: true,
        paths: &[
            (
                &[(1, 0, 0), (2, 0, 0), (0, 0, 1)],
                "-4*h1^3*h2^3-8*h1^2*h2^4-4*h1*h2^5+6*h1^3*h2+30*h1^2*h2^2+16*h1*h2^3-20*h2^4-12*h2^2",
            ),
            (
                &[(1, 0, 0), (0, 0, 1), (2, 0, 0)],
                "-4*h1^3*h2^3-8*h1^2*h2^4-4*h1*h2^5-18*h1^3*h2-66*h1^2*h2^2-44*h1*h2^3+16*h2^4+18*h1*h2+42*h2^2",
            ),
            (&[(0, 0, 1), (1, 0, 0), (2, 0, 0)], "-2*(h1*h3+1)*h2*(2*h2^2*h3+6*h2-9*h3)"),
        ],
    },
    // Printed with a repeated (h1, h3, h2) label, read as (h2, h3, h1), and with unbalanced
    // brackets in two numerators, read literally.
    LrShape {
        name: "xyz",
        heights: "[[2,1],[1]]",
        third: true,
        paths: &[
            (&[(0, 1, 0), (1, 0, 0), (0, 0, 1)], "-2*(h1*h3+1)*(h1*h2*h3-6*h1*h3-3*h2^2)"),
            (&[(0, 0, 1), (1, 0, 0), (0, 1, 0)], "-2*(h1*h3+1)*(h1*h2*h3-6*h1*h3-3*h2^2)"),
            (&[(1, 0, 0), (0, 1, 0), (0, 0, 1)], "-2*(h1*h3+1)*(3*h1^2-h3*h2+h3*h2*h1)+3*h3*h2+3*h1*h3-6*h1^2+3*h3^2"),
            (&[(0, 0, 1), (0, 1, 0), (1, 0, 0)], "-2*(h1*h3+1)*(h1*h2*h3+3*h1^2-6*h2*h3)"),
            (&[(0, 1, 0), (0, 0, 1), (1, 0, 0)], "-2*(h1*h3+1)*(h1*h2*h3-6*h1*h2+3*h3^2)"),
            (&[(1, 0, 0), (0, 0, 1), (0, 1, 0)], "-2*(h1*h3+1)*(-6*h1*h2+3*h3^2+h3*h2*h1)+3*h3*h2-3*h1*h3+6*h1^2-3*h3^2"),
        ],
    },
];

/// A path-labelled expansion `sum_p c_p v_p` restricted to one shape.
pub struct Expansion {
    pub name: &'static str,
    pub heights: &'static str,
    pub paths: &'static [PathEntry],
}

/// `b_{-3,1}` applied to the one-box 3-Jack.
pub const B3_ON_ONE_BOX: &[Expansion] = &[
    Expansion {
        name: "y-column",
        heights: "[[1,1,1,1]]",
        paths: &[
            (&[(0, 1, 0), (0, 2, 0), (0, 3, 0)], "h1^2"),
        ],
    },
    Expansion {
        name: "x-column",
        heights: "[[1],[1],[1],[1]]",
        paths: &[
            (&[(1, 0, 0), (2, 0, 0), (3, 0, 0)], "h2^2"),
        ],
    },
    Expansion {
        name: "z-column",
        heights: "[[4]]",
        paths: &[
            (&[(0, 0, 1), (0, 0, 2), (0, 0, 3)], "h3^2"),
        ],
    },
    Expansion {
        name: "yyx",
        heights: "[[1,1,1],[1]]",
        paths: &[
            (&[(0, 1, 0), (0, 2, 0), (1, 0, 0)], "h1^2"),
            (&[(0, 1, 0), (1, 0, 0), (0, 2, 0)], "(3*h1*h2-4*h1^2)/2"),
            (&[(1, 0, 0), (0, 1, 0), (0, 2, 0)], "(2*h1^2-3*h1*h2)/2"),
        ],
    },
    Expansion {
        name: "yyz",
        heights: "[[2,1,1]]",
        paths: &[
            (&[(0, 1, 0), (0, 2, 0), (0, 0, 1)], "h1^2"),
            (&[(0, 1, 0), (0, 0, 1), (0, 2, 0)], "(3*h1*h3-4*h1^2)/2"),
            (&[(0, 0, 1), (0, 1, 0), (0, 2, 0)], "(2*h1^2-3*h1*h3)/2"),
        ],
    },
    Expansion {
        name: "yxx",
        heights: "[[1,1],[1],[1]]",
        paths: &[
            (&[(1, 0, 0), (2, 0, 0), (0, 1, 0)], "h2^2"),
            (&[(1, 0, 0), (0, 1, 0), (2, 0, 0)], "(3*h1*h2-4*h2^2)/2"),
            (&[(0, 1, 0), (1, 0, 0), (2, 0, 0)], "(2*h2^2-3*h1*h2)/2"),
        ],
    },
    Expansion {
        name: "xxz",
        heights: "[[2],[1],[1]]",
        paths: &[
            (&[(1, 0, 0), (2, 0, 0), (0, 0, 1)], "h2^2"),
            (&[(1, 0, 0), (0, 0, 1), (2, 0, 0)], "(3*h2*h3-4*h2^2)/2"),
            (&[(0, 0, 1), (1, 0, 0), (2, 0, 0)], "(2*h2^2-3*h2*h3)/2"),
        ],
    },
    Expansion {
        name: "xzz",
        heights: "[[3],[1]]",
        paths: &[
            (&[(0, 0, 1), (0, 0, 2), (1, 0, 0)], "h3^2"),
            (&[(0, 0, 1), (1, 0, 0), (0, 0, 2)], "(3*h2*h3-4*h3^2)/2"),
            (&[(1, 0, 0), (0, 0, 1), (0, 0, 2)], "(2*h3^2-3*h2*h3)/2"),
        ],
    },
    Expansion {
        name: "yzz",
        heights: "[[3,1]]",
        paths: &[
            (&[(0, 0, 1), (0, 0, 2), (0, 1, 0)], "h3^2"),
            (&[(0, 0, 1), (0, 1, 0), (0, 0, 2)], "(3*h1*h3-4*h3^2)/2"),
            (&[(0, 1, 0), (0, 0, 1), (0, 0, 2)], "(2*h3^2-3*h1*h3)/2"),
        ],
    },
    Expansion {
        name: "yzy",
        heights: "[[2,2]]",
        paths: &[
            (&[(0, 1, 0), (0, 0, 1), (0, 1, 1)], "(h3^2-2*h1^2)/2"),
            (&[(0, 0, 1), (0, 1, 0), (0, 1, 1)], "(h1^2-2*h3^2)/2"),
        ],
    },
    Expansion {
        name: "yxy",
        heights: "[[1,1],[1,1]]",
        paths: &[
            (&[(0, 1, 0), (1, 0, 0), (1, 1, 0)], "(h2^2-2*h1^2)/2"),
            (&[(1, 0, 0), (0, 1, 0), (1, 1, 0)], "(h1^2-2*h2^2)/2"),
        ],
    },
    Expansion {
        name: "xzx",
        heights: "[[2],[2]]",
        paths: &[
            (&[(1, 0, 0), (0, 0, 1), (1, 0, 1)], "(h3^2-2*h2^2)/2"),
            (&[(0, 0, 1), (1, 0, 0), (1, 0, 1)], "(h2^2-2*h3^2)/2"),
        ],
    },
    Expansion {
        name: "xyz",
        heights: "[[2,1],[1]]",
        paths: &[
            (&[(0, 0, 1), (1, 0, 0), (0, 1, 0)], "(-h2^2-2*h1*h3)/2"),
            (&[(0, 1, 0), (1, 0, 0), (0, 0, 1)], "(-h2^2-2*h1*h3)/2"),
            (&[(1, 0, 0), (0, 1, 0), (0, 0, 1)], "(-h1^2-2*h2*h3)/2"),
            (&[(0, 0, 1), (0, 1, 0), (1, 0, 0)], "(-h1^2-2*h2*h3)/2"),
            (&[(0, 1, 0), (0, 0, 1), (1, 0, 0)], "(-h3^2-2*h1*h2)/2"),
            (&[(1, 0, 0), (0, 0, 1), (0, 1, 0)], "(-h3^2-2*h1*h2)/2"),
        ],
    },
];

/// `b_{-4,1}` applied to the vacuum.
pub const B4_ON_VACUUM: &[Expansion] = &[
    Expansion {
        name: "y-column",
        heights: "[[1,1,1,1]]",
        paths: &[
            (&[(0, 1, 0), (0, 2, 0), (0, 3, 0)], "h1^3"),
        ],
    },
    Expansion {
        name: "x-column",
        heights: "[[1],[1],[1],[1]]",
        paths: &[
            (&[(1, 0, 0), (2, 0, 0), (3, 0, 0)], "h2^3"),
        ],
    },
    Expansion {
        name: "z-column",
        heights: "[[4]]",
        paths: &[
            (&[(0, 0, 1), (0, 0, 2), (0, 0, 3)], "h3^3"),
        ],
    },
    Expansion {
        name: "yyx",
        heights: "[[1,1,1],[1]]",
        paths: &[
            (&[(0, 1, 0), (0, 2, 0), (1, 0, 0)], "h1^2*h2/3"),
            (&[(0, 1, 0), (1, 0, 0), (0, 2, 0)], "h1^2*h2/3"),
            (&[(1, 0, 0), (0, 1, 0), (0, 2, 0)], "h1^2*h2/3"),
        ],
    },
    Expansion {
        name: "yyz",
        heights: "[[2,1,1]]",
        paths: &[
            (&[(0, 1, 0), (0, 2, 0), (0, 0, 1)], "h1^2*h3/3"),
            (&[(0, 1, 0), (0, 0, 1), (0, 2, 0)], "h1^2*h3/3"),
            (&[(0, 0, 1), (0, 1, 0), (0, 2, 0)], "h1^2*h3/3"),
        ],
    },
    Expansion {
        name: "yxx",
        heights: "[[1,1],[1],[1]]",
        paths: &[
            (&[(1, 0, 0), (2, 0, 0), (0, 1, 0)], "h2^2*h1/3"),
            (&[(1, 0, 0), (0, 1, 0), (2, 0, 0)], "h2^2*h1/3"),
            (&[(0, 1, 0), (1, 0, 0), (2, 0, 0)], "h2^2*h1/3"),
        ],
    },
    Expansion {
        name: "xxz",
        heights: "[[2],[1],[1]]",
        paths: &[
            (&[(1, 0, 0), (2, 0, 0), (0, 0, 1)], "h2^2*h3/3"),
            (&[(1, 0, 0), (0, 0, 1), (2, 0, 0)], "h2^2*h3/3"),
            (&[(0, 0, 1), (1, 0, 0), (2, 0, 0)], "h2^2*h3/3"),
        ],
    },
    Expansion {
        name: "xzz",
        heights: "[[3],[1]]",
        paths: &[
            (&[(0, 0, 1), (0, 0, 2), (1, 0, 0)], "h3^2*h2/3"),
            (&[(0, 0, 1), (1, 0, 0), (0, 0, 2)], "h3^2*h2/3"),
            (&[(1, 0, 0), (0, 0, 1), (0, 0, 2)], "h3^2*h2/3"),
        ],
    },
    Expansion {
        name: "yzz",
        heights: "[[3,1]]",
        paths: &[
            (&[(0, 0, 1), (0, 0, 2), (0, 1, 0)], "h3^2*h1/3"),
            (&[(0, 0, 1), (0, 1, 0), (0, 0, 2)], "h3^2*h1/3"),
            (&[(0, 1, 0), (0, 0, 1), (0, 0, 2)], "h3^2*h1/3"),
        ],
    },
    Expansion {
        name: "yzy",
        heights: "[[2,2]]",
        paths: &[
            (&[(0, 1, 0), (0, 0, 1), (0, 1, 1)], "h1*h3*(h1+h3)/6"),
            (&[(0, 0, 1), (0, 1, 0), (0, 1, 1)], "h1*h3*(h1+h3)/6"),
        ],
    },
    Expansion {
        name: "yxy",
        heights: "[[1,1],[1,1]]",
        paths: &[
            (&[(0, 1, 0), (1, 0, 0), (1, 1, 0)], "h1*h2*(h1+h2)/6"),
            (&[(1, 0, 0), (0, 1, 0), (1, 1, 0)], "h1*h2*(h1+h2)/6"),
        ],
    },
    Expansion {
        name: "xzx",
        heights: "[[2],[2]]",
        paths: &[
            (&[(1, 0, 0), (0, 0, 1), (1, 0, 1)], "h2*h3*(h2+h3)/6"),
            (&[(0, 0, 1), (1, 0, 0), (1, 0, 1)], "h2*h3*(h2+h3)/6"),
        ],
    },
    Expansion {
        name: "xyz",
        heights: "[[2,1],[1]]",
        paths: &[
            (&[(0, 0, 1), (1, 0, 0), (0, 1, 0)], "h1*h2*h3/6"),
            (&[(0, 1, 0), (1, 0, 0), (0, 0, 1)], "h1*h2*h3/6"),
            (&[(1, 0, 0), (0, 1, 0), (0, 0, 1)], "h1*h2*h3/6"),
            (&[(0, 0, 1), (0, 1, 0), (1, 0, 0)], "h1*h2*h3/6"),
            (&[(0, 1, 0), (0, 0, 1), (1, 0, 0)], "h1*h2*h3/6"),
            (&[(1, 0, 0), (0, 0, 1), (0, 1, 0)], "h1*h2*h3/6"),
        ],
    },
];
