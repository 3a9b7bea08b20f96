use num_rational::BigRational;
use proptest::prelude::*;
use yangian_core::planepart::enumerate;
use num_traits::Zero;
use yangian_core::{Coeff, PlanePartition, RatFunc};

/// Count plane partitions of `n` with heights `<= n_max` by filling an n x n grid
/// with weakly decreasing heights.
fn brute_count(n: u32, n_max: u32) -> usize {
    fn fill(cells: &mut Vec<u32>, dim: usize, left: u32, n_max: u32) -> usize {
        let k = cells.len();
        if k == dim * dim {
            return (left == 0) as usize;
        }
        let (x, y) = (k / dim, k % dim);
        let mut cap = n_max.min(left);
        if x > 0 {
            cap = cap.min(cells[k - dim]);
        }
        if y > 0 {
            cap = cap.min(cells[k - 1]);
        }
        let mut total = 0;
        for h in 0..=cap {
            cells.push(h);
            total += fill(cells, dim, left - h, n_max);
            cells.pop();
        }
        total
    }
    fill(&mut Vec::new(), n.max(1) as usize, n, n_max)
}

#[test]
fn enumeration_matches_brute_force() {
    for n in 0..=6u32 {
        for n_max in 1..=4u32 {
            assert_eq!(enumerate(n as usize, n_max as usize).len(), brute_count(n, n_max), "n={n} N={n_max}");
        }
    }
    // MacMahon numbers when the height bound is inactive
    let macmahon = [1, 1, 3, 6, 13, 24, 48];
    for (n, &m) in macmahon.iter().enumerate() {
        assert_eq!(enumerate(n, n.max(1)).len(), m);
    }
}

fn arb_partition() -> impl Strategy<Value = PlanePartition> {
    (0usize..=6, 1usize..=3).prop_flat_map(|(n, nm)| {
        let all = enumerate(n, nm);
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

fn arb_rat() -> impl Strategy<Value = BigRational> {
    (-30i64..=30, 1i64..=9).prop_map(|(a, b)| BigRational::new(a.into(), b.into()))
}

/// A small polynomial expression in `h1, h2`.
fn arb_ratfunc() -> impl Strategy<Value = RatFunc> {
    (-4i64..=4, -4i64..=4, -4i64..=4, 0u32..=2, 1i64..=3, 0u32..=2).prop_map(|(a, b, c, e, d, f)| {
        let num = RatFunc::from_i64(a) * RatFunc::h1().pow(e) + RatFunc::from_i64(b) * RatFunc::h2() + RatFunc::from_i64(c);
        let den = RatFunc::from_i64(d) + RatFunc::h1() * RatFunc::h2().pow(f);
        num.checked_div(&den).unwrap()
    })
}

proptest! {
    #[test]
    fn partition_text_round_trip(pi in arb_partition()) {
        let s = pi.to_string();
        let back: PlanePartition = s.parse().unwrap();
        prop_assert_eq!(&back, &pi);
        let json = serde_json::to_string(&pi).unwrap();
        prop_assert_eq!(serde_json::from_str::<PlanePartition>(&json).unwrap(), pi);
    }

    #[test]
    fn add_then_remove(pi in arb_partition()) {
        for b in pi.addable(3) {
            let up = pi.add_box(&b).unwrap();
            prop_assert_eq!(up.size(), pi.size() + 1);
            prop_assert!(up.removable().contains(&b));
            prop_assert_eq!(up.remove_box(&b).unwrap(), pi.clone());
        }
    }

    #[test]
    fn transpose_is_an_involution(pi in arb_partition()) {
        prop_assert_eq!(pi.transpose().transpose(), pi.clone());
        prop_assert_eq!(pi.transpose().size(), pi.size());
    }

    #[test]
    fn canonical_scalar_round_trip(x in arb_ratfunc()) {
        let s = x.to_canonical();
        prop_assert_eq!(RatFunc::parse_canonical(&s).unwrap(), x);
    }

    #[test]
    fn field_axioms(x in arb_ratfunc(), y in arb_ratfunc(), z in arb_ratfunc()) {
        prop_assert_eq!((x.clone() + &y) * &z, x.clone() * &z + y.clone() * &z);
        prop_assert_eq!(x.clone() * &y, y.clone() * &x);
        if !y.is_zero() {
            prop_assert_eq!(x.checked_div(&y).unwrap() * &y, x.clone());
        }
        prop_assert!((x.clone() - &x).is_zero());
    }

    #[test]
    fn evaluation_is_a_homomorphism(x in arb_ratfunc(), y in arb_ratfunc(), h1 in arb_rat(), h2 in arb_rat()) {
        let (a, b) = (x.eval(&h1, &h2), y.eval(&h1, &h2));
        if let (Ok(a), Ok(b)) = (a, b) {
            prop_assert_eq!((x.clone() * &y).eval(&h1, &h2).unwrap(), a.clone() * &b);
            prop_assert_eq!((x.clone() + &y).eval(&h1, &h2).unwrap(), a + b);
        }
    }
}
