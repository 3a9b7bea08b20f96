//! Serializable command results and their plain / LaTeX renderings.

use serde::{Deserialize, Serialize};
use yangian_core::verify::SuiteReport;
use yangian_core::{Coeff, FockState, PPVector, PWord, PlanePartition};

use crate::cache::CacheEntry;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Latex,
    Plain,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Term {
    pub label: String,
    pub coeff: String,
}

/// Where a result was evaluated: `h1`, `h2` in canonical text form.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Point {
    pub tag: String,
    pub h1: String,
    pub h2: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EnumerateOutput {
    pub size: usize,
    pub n: usize,
    pub count: usize,
    pub partitions: Vec<PlanePartition>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct JackOutput {
    pub partition: PlanePartition,
    pub n: usize,
    pub point: Point,
    /// in `p_{j,n}` monomials
    pub p_monomials: Vec<Term>,
    /// in `P_{n,j}` words
    pub p_basis: Vec<Term>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LrOutput {
    pub left: PlanePartition,
    pub right: PlanePartition,
    pub n: usize,
    pub point: Point,
    pub terms: Vec<Term>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Generator {
    pub n: u32,
    pub j: u8,
    pub p_monomials: Vec<Term>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PBasisOutput {
    pub level: usize,
    pub n: usize,
    pub point: Point,
    pub generators: Vec<Generator>,
    /// P-words of degree `level`; as many as plane partitions of that size
    pub words: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyOutput {
    pub ok: bool,
    pub reports: Vec<SuiteReport>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CacheStatus {
    pub dir: String,
    pub entries: Vec<CacheEntry>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CacheCleared {
    pub dir: String,
    pub removed: usize,
}

pub fn point<F: Coeff>(tag: &str, h1: &F, h2: &F) -> Point {
    Point { tag: tag.to_string(), h1: h1.to_canonical(), h2: h2.to_canonical() }
}

pub fn fock_terms<F: Coeff>(s: &FockState<F>) -> Vec<Term> {
    s.iter().map(|(m, c)| Term { label: m.to_string(), coeff: c.to_canonical() }).collect()
}

pub fn word_terms<F: Coeff>(v: &[(PWord, F)]) -> Vec<Term> {
    v.iter().map(|(w, c)| Term { label: w.to_string(), coeff: c.to_canonical() }).collect()
}

pub fn pp_terms<F: Coeff>(v: &PPVector<F>) -> Vec<Term> {
    v.iter().map(|(p, c)| Term { label: p.to_string(), coeff: c.to_canonical() }).collect()
}

pub trait Render: Serialize {
    fn plain(&self) -> String;

    fn latex(&self) -> String {
        self.plain()
    }

    fn render(&self, fmt: Format) -> anyhow::Result<String> {
        Ok(match fmt {
            Format::Json => serde_json::to_string_pretty(self)?,
            Format::Plain => self.plain(),
            Format::Latex => self.latex(),
        })
    }
}

impl<T: Render> Render for Vec<T> {
    fn plain(&self) -> String {
        self.iter().map(Render::plain).collect::<Vec<_>>().join("\n")
    }

    fn latex(&self) -> String {
        self.iter().map(Render::latex).collect::<Vec<_>>().join("\n")
    }
}

// ------------------------------------------------------------ text helpers

/// `h1^2*h2 - 3` -> `h_1^{2} h_2 - 3`.
fn latex_poly(s: &str) -> String {
    let mut out = String::new();
    let mut chars = s.chars().peekable();
    while let Some(c) = chars.next() {
        match c {
            'h' => {
                out.push_str("h_");
            }
            '*' => out.push(' '),
            '^' => {
                out.push_str("^{");
                while let Some(d) = chars.peek().copied().filter(|d| d.is_ascii_digit()) {
                    out.push(d);
                    chars.next();
                }
                out.push('}');
            }
            _ => out.push(c),
        }
    }
    out
}

fn strip_parens(s: &str) -> &str {
    s.strip_prefix('(').and_then(|t| t.strip_suffix(')')).unwrap_or(s)
}

/// LaTeX for a canonical scalar such as `(h1 - 1)/(h2)`, `-3/2` or `(h1 + h2)`.
pub fn latex_scalar(s: &str) -> String {
    if let Some(i) = s.find(")/(") {
        let (num, den) = (&s[..=i], &s[i + 2..]);
        let (sign, num) = match num.strip_prefix('-') {
            Some(rest) => ("-", rest),
            None => ("", num),
        };
        return format!("{sign}\\frac{{{}}}{{{}}}", latex_poly(strip_parens(num)), latex_poly(strip_parens(den)));
    }
    if let Some((num, den)) = s.split_once('/') {
        let (sign, num) = match num.strip_prefix('-') {
            Some(rest) => ("-", rest),
            None => ("", num),
        };
        return format!("{sign}\\frac{{{}}}{{{}}}", latex_poly(strip_parens(num)), latex_poly(strip_parens(den)));
    }
    latex_poly(strip_parens(s))
}

fn is_compound(s: &str) -> bool {
    let body = s.strip_prefix('-').unwrap_or(s);
    body.contains(" + ") || body.contains(" - ")
}

/// Join `coeff * label` terms; unit coefficients are dropped.
fn join_terms(terms: &[Term], latex: bool) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, t) in terms.iter().enumerate() {
        let (neg, c) = match t.coeff.strip_prefix('-') {
            Some(rest) if !is_compound(rest) => (true, rest.to_string()),
            _ => (false, t.coeff.clone()),
        };
        let c = if latex { latex_scalar(&c) } else { c };
        let sep = match (i, neg) {
            (0, true) => "-",
            (0, false) => "",
            (_, true) => " - ",
            (_, false) => " + ",
        };
        out.push_str(sep);
        let unit = c == "1";
        let scalar = if unit {
            String::new()
        } else if is_compound(&c) && !c.starts_with("\\frac") {
            format!("({})", strip_parens(&c))
        } else {
            c
        };
        match (unit, t.label == "1" || t.label.is_empty()) {
            (true, true) => out.push('1'),
            (true, false) => out.push_str(&t.label),
            (false, true) => out.push_str(&scalar),
            (false, false) if latex => out.push_str(&format!("{scalar} {}", t.label)),
            (false, false) => out.push_str(&format!("{scalar}*{}", t.label)),
        }
    }
    out
}

/// `p1_2^3` -> `p_{1,2}^{3}`; `P2_1` -> `P_{2,1}`.
fn latex_label(label: &str) -> String {
    if label == "1" {
        return "1".into();
    }
    label
        .split('*')
        .map(|f| {
            let (base, exp) = match f.split_once('^') {
                Some((b, e)) => (b, Some(e)),
                None => (f, None),
            };
            let letter = &base[..1];
            let (a, b) = base[1..].split_once('_').unwrap_or((&base[1..], ""));
            let mut s = format!("{letter}_{{{a},{b}}}");
            if let Some(e) = exp {
                s.push_str(&format!("^{{{e}}}"));
            }
            s
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn latex_terms(terms: &[Term]) -> String {
    let t: Vec<Term> = terms.iter().map(|t| Term { label: latex_label(&t.label), coeff: t.coeff.clone() }).collect();
    join_terms(&t, true)
}

fn point_line(p: &Point) -> String {
    format!("{} (h1 = {}, h2 = {})", p.tag, p.h1, p.h2)
}

impl Render for EnumerateOutput {
    fn plain(&self) -> String {
        let mut s = format!("{} plane partitions of {} with height <= {}\n", self.count, self.size, self.n);
        for p in &self.partitions {
            s.push_str(&format!("{p}\n"));
        }
        s.trim_end().to_string()
    }
}

impl Render for JackOutput {
    fn plain(&self) -> String {
        format!(
            "J{} at {}\n  = {}\n  = {}",
            self.partition,
            point_line(&self.point),
            join_terms(&self.p_basis, false),
            join_terms(&self.p_monomials, false)
        )
    }

    /// Only the P-word form, which is the one that mirrors the displayed formulas.
    fn latex(&self) -> String {
        latex_terms(&self.p_basis)
    }
}

impl Render for LrOutput {
    fn plain(&self) -> String {
        let mut s = format!("J{} x J{} at {}\n", self.left, self.right, point_line(&self.point));
        for t in &self.terms {
            s.push_str(&format!("  {}: {}\n", t.label, t.coeff));
        }
        s.trim_end().to_string()
    }

    fn latex(&self) -> String {
        let t: Vec<Term> = self
            .terms
            .iter()
            .map(|t| Term { label: format!("\\tilde{{J}}_{{{}}}", t.label), coeff: t.coeff.clone() })
            .collect();
        format!("\\tilde{{J}}_{{{}}} \\tilde{{J}}_{{{}}} = {}", self.left, self.right, join_terms(&t, true))
    }
}

impl Render for PBasisOutput {
    fn plain(&self) -> String {
        let mut s = format!("P generators up to level {} at {}\n", self.level, point_line(&self.point));
        for g in &self.generators {
            s.push_str(&format!("  P{}_{} = {}\n", g.n, g.j, join_terms(&g.p_monomials, false)));
        }
        s.push_str(&format!("{} words of degree {}: {}", self.words.len(), self.level, self.words.join(", ")));
        s
    }

    fn latex(&self) -> String {
        let lines: Vec<String> =
            self.generators.iter().map(|g| format!("P_{{{},{}}} = {}", g.n, g.j, latex_terms(&g.p_monomials))).collect();
        lines.join("\n")
    }
}

impl Render for VerifyOutput {
    fn plain(&self) -> String {
        let mut s = String::new();
        for r in &self.reports {
            s.push_str(&format!("[{} N={} {}]\n", r.suite, r.n, r.mode));
            for c in &r.checks {
                s.push_str(&format!("  {:9} {}", c.status.to_string(), c.name));
                if let Some(w) = &c.witness {
                    s.push_str(&format!("  witness: {w}"));
                }
                if let Some(n) = &c.note {
                    s.push_str(&format!("  ({n})"));
                }
                s.push('\n');
            }
        }
        s.push_str(if self.ok { "all checks passed" } else { "verification FAILED" });
        s
    }
}

impl Render for CacheStatus {
    fn plain(&self) -> String {
        let mut s = format!("cache dir {}: {} files\n", self.dir, self.entries.len());
        for e in &self.entries {
            let stale = if e.current { "" } else { " (stale schema)" };
            s.push_str(&format!("  {} {} bytes{stale}\n", e.file, e.bytes));
        }
        s.trim_end().to_string()
    }
}

impl Render for CacheCleared {
    fn plain(&self) -> String {
        format!("removed {} cache files from {}", self.removed, self.dir)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(label: &str, coeff: &str) -> Term {
        Term { label: label.into(), coeff: coeff.into() }
    }

    #[test]
    fn latex_scalars() {
        assert_eq!(latex_scalar("h1^2*h2 - 3"), "h_1^{2} h_2 - 3");
        assert_eq!(latex_scalar("-3/2"), "-\\frac{3}{2}");
        assert_eq!(latex_scalar("(h1 - 1)/(h1^2*h2)"), "\\frac{h_1 - 1}{h_1^{2} h_2}");
        assert_eq!(latex_scalar("(h1 + h2)"), "h_1 + h_2");
    }

    #[test]
    fn latex_words() {
        assert_eq!(latex_terms(&[t("P1_1", "1")]), "P_{1,1}");
        assert_eq!(latex_terms(&[t("1", "1")]), "1");
        assert_eq!(latex_terms(&[t("P2_1", "(h1 + h2)"), t("P2_2", "-1")]), "(h_1 + h_2) P_{2,1} - P_{2,2}");
        assert_eq!(latex_label("p1_2^3*p2_1"), "p_{1,2}^{3} p_{2,1}");
    }

    fn round_trip<T: Serialize + for<'de> Deserialize<'de> + PartialEq + std::fmt::Debug>(v: &T) {
        let s = serde_json::to_string(v).unwrap();
        let back: T = serde_json::from_str(&s).unwrap();
        assert_eq!(&back, v);
        assert_eq!(serde_json::to_string(&back).unwrap(), s);
    }

    #[test]
    fn outputs_round_trip() {
        let pt = Point { tag: "sym".into(), h1: "h1".into(), h2: "h2".into() };
        let pp: PlanePartition = "[[2,1],[1]]".parse().unwrap();
        round_trip(&EnumerateOutput { size: 4, n: 2, count: 1, partitions: vec![pp.clone()] });
        round_trip(&JackOutput {
            partition: pp.clone(),
            n: 2,
            point: pt.clone(),
            p_monomials: vec![t("p1_1^2", "(h1)/(h1 - h2)")],
            p_basis: vec![t("P1_1", "1")],
        });
        round_trip(&LrOutput { left: pp.clone(), right: PlanePartition::empty(), n: 2, point: pt.clone(), terms: vec![t("[[1]]", "-3/2")] });
        round_trip(&PBasisOutput {
            level: 2,
            n: 2,
            point: pt,
            generators: vec![Generator { n: 1, j: 1, p_monomials: vec![t("p1_1", "1")] }],
            words: vec!["P1_1^2".into()],
        });
        round_trip(&CacheStatus {
            dir: "/tmp/x".into(),
            entries: vec![CacheEntry { file: "f".into(), schema: 1, n: 2, level: 3, tag: "sym".into(), bytes: 10, current: true }],
        });
        round_trip(&CacheCleared { dir: "/tmp/x".into(), removed: 2 });
        let report = yangian_core::verify::run_suite(
            yangian_core::verify::Suite::Degenerations,
            &yangian_core::verify::VerifyOptions::symbolic(1, 2),
        )
        .unwrap();
        round_trip(&VerifyOutput { ok: true, reports: report });
    }

    #[test]
    fn plain_terms() {
        assert_eq!(join_terms(&[t("P1_1", "2"), t("P2_1", "-h1")], false), "2*P1_1 - h1*P2_1");
        assert_eq!(join_terms(&[], false), "0");
        assert_eq!(join_terms(&[t("P1_1", "1"), t("P2_1", "-h1 + 2")], false), "P1_1 + (-h1 + 2)*P2_1");
    }
}
