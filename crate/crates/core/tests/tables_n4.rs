//! Printed path tables at `N = 4` on the `psi0 = 1` slice, where shapes of height up to
//! four (the z-column and its neighbours) are representable.

mod common;

use num_rational::BigRational;
use common::tables::{self, Expansion};
use yangian_core::fock::apply_operator;
use yangian_core::jack3::lr_product;
use yangian_core::verify::shape_sum;
use yangian_core::wfields::mode_b;
use yangian_core::{Coeff, FockState, JackTable, ModelConfig, PBasis, PlanePartition, RatFunc};

type Q = BigRational;

fn pp(s: &str) -> PlanePartition {
    s.parse().unwrap()
}

fn points() -> Vec<ModelConfig<Q>> {
    [(7, 2), (-5, 3)].iter().map(|&(a, b)| ModelConfig::probe_psi0_one(4, Q::new(a.into(), b.into())).unwrap()).collect()
}

fn den(cfg: &ModelConfig<Q>) -> Q {
    RatFunc::parse_canonical(&tables::LR_DEN.replace("h3", "(-h1-h2)")).unwrap().eval(&cfg.h1, &cfg.h2).unwrap()
}

fn mismatches(got: &yangian_core::PPVector<Q>, tab: &[Expansion], cfg: &ModelConfig<Q>) -> Vec<&'static str> {
    let mut off = Vec::new();
    for e in tab {
        let pi = pp(e.heights);
        assert!(pi.max_height() as usize <= cfg.n);
        if got.get(&pi) != shape_sum(&pi, e.paths, cfg).unwrap() {
            off.push(e.name);
        }
    }
    off
}

#[test]
fn b_expansions_cover_all_shapes() {
    for cfg in points() {
        let table = JackTable::compute(4, &cfg).unwrap();
        let basis = table.basis(4).unwrap();
        let one = table.jack(&pp("[[1]]")).unwrap();
        let b3 = basis.expand(&apply_operator(&mode_b(1, -3, &cfg, 4).unwrap(), one, &cfg).unwrap()).unwrap();
        let b4 = basis.expand(&apply_operator(&mode_b(1, -4, &cfg, 4).unwrap(), &FockState::vacuum(), &cfg).unwrap()).unwrap();
        assert_eq!(mismatches(&b3, tables::B3_ON_ONE_BOX, &cfg), Vec::<&str>::new(), "h1 = {}", cfg.h1);
        assert_eq!(mismatches(&b4, tables::B4_ON_VACUUM, &cfg), Vec::<&str>::new(), "h1 = {}", cfg.h1);
    }
}

#[test]
fn lr_table_with_z_shapes() {
    for cfg in points() {
        let table = JackTable::compute(4, &cfg).unwrap();
        let pb = PBasis::compute(2, &cfg).unwrap();
        let (a, b) = (pp("[[1,1]]"), pp("[[1],[1]]"));
        let ab = lr_product(&table, &pb, &a, &b).unwrap();
        assert_eq!(ab, lr_product(&table, &pb, &b, &a).unwrap());
        let d = den(&cfg);
        let mut off = Vec::new();
        for sh in tables::LR_SHAPES {
            let pi = pp(sh.heights);
            let mut want = shape_sum(&pi, sh.paths, &cfg).unwrap() / &d;
            if sh.third {
                want = want / Q::from_i64(3);
            }
            if ab.get(&pi) != want {
                off.push(sh.name);
            }
        }
        assert_eq!(off, ["yyx", "yzy", "yxy", "xzx", "xyz"], "h1 = {}", cfg.h1);
    }
}
