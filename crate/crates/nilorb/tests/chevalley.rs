use nilorb::chevalley::bfs::rep_orbits_disjoint;
use nilorb::chevalley::coadjoint::{check_additivity, check_formula_a, coadjoint_generator, dual_index, identity};
use nilorb::chevalley::tables::{mass_sum, row};
use nilorb::chevalley::*;
use nilorb::Error;

fn g2() -> ChevalleyAlgebra {
    ChevalleyAlgebra::build(Group::G2).unwrap()
}

fn f4() -> ChevalleyAlgebra {
    ChevalleyAlgebra::build(Group::F4).unwrap()
}

#[test]
fn dimensions_and_roots() {
    assert_eq!(g2().dim(), 14);
    assert_eq!(f4().dim(), 52);
    assert_eq!(RootSystem::new(Group::G2).n_pos, 6);
    assert_eq!(RootSystem::new(Group::F4).n_pos, 24);
}

#[test]
fn jacobi_over_the_integers() {
    g2().check_jacobi().unwrap();
    f4().check_jacobi().unwrap();
}

#[test]
fn listed_constants() {
    let g = g2();
    let r = |s: &str| g.rs.parse(s).unwrap();
    assert_eq!(g.n(r("a"), r("b")), 1);
    assert_eq!(g.n(r("a"), r("ab")), 2);
    assert_eq!(g.n(r("a"), r("2ab")), 3);
    assert_eq!(g.n(r("b"), r("3ab")), -1);
    assert_eq!(g.n(r("ab"), r("2ab")), 3);
}

#[test]
fn closed_formula_and_additivity() {
    for alg in [g2(), f4()] {
        for q in [2, 3, 4] {
            let gf = Gf::new(q).unwrap();
            assert!(check_formula_a(&alg, &gf).unwrap() > 0);
            check_additivity(&alg, &gf).unwrap();
        }
    }
}

#[test]
fn generator_examples() {
    let alg = g2();
    let gf = Gf::new(2).unwrap();
    for root in 0..12 {
        assert_eq!(coadjoint_generator(&alg, &gf, root, 0).unwrap(), identity(14));
        let x = coadjoint_generator(&alg, &gf, root, 1).unwrap();
        assert_eq!(coadjoint::mat_mul(&gf, &x, &x), identity(14));
    }
}

#[test]
fn field_parameters() {
    assert_eq!(Gf::new(3).unwrap().zeta(), Some(2));
    assert_eq!(Gf::new(3).unwrap().varpi(), None);
    assert_eq!(Gf::new(2).unwrap().eta(), Some(1));
    assert_eq!(Gf::new(2).unwrap().varpi(), Some(1));
    assert!(Gf::new(6).is_err());
}

#[test]
fn table_rows() {
    assert_eq!(table(Group::G2).unwrap().len(), 7);
    assert_eq!(table(Group::F4).unwrap().len(), 26);
    assert_eq!(row(Group::G2, "2,1").unwrap().centralizer, QPoly::parse("6*q^4").unwrap());
    assert_eq!(
        row(Group::F4, "17").unwrap().centralizer,
        QPoly::parse("q^24*(q^2-1)*(q^4-1)*(q^6-1)").unwrap()
    );
}

#[test]
fn masses() {
    let g = mass_check(Group::G2).unwrap();
    assert!(g.ok);
    assert_eq!(g.sum, "q^12");
    let f = mass_check(Group::F4).unwrap();
    assert!(f.ok, "{:?}", f.failures);
    assert_eq!(f.sum, "q^48");
    let zero: Vec<_> = table(Group::F4).unwrap().into_iter().filter(|r| r.rep.is_empty()).collect();
    assert_eq!(mass_sum(&zero).unwrap().1, QPoly::constant(1));
}

#[test]
fn group_orders() {
    let g = row(Group::G2, "5").unwrap().centralizer;
    assert_eq!(g.eval_u64(3), Some(4245696));
    assert_eq!(g.eval_u64(3).unwrap() / 9, 471744);
}

#[test]
fn materialized_parameters() {
    let alg = g2();
    let gf = Gf::new(3).unwrap();
    let v = materialize_rep(&alg, &row(Group::G2, "2,3").unwrap(), &gf).unwrap();
    // −ζ = −2 = 1 over F_3
    assert_eq!(v[dual_index(&alg, alg.rs.parse("2ab").unwrap())], 1);
    assert_eq!(
        materialize_rep(&alg, &row(Group::G2, "2,2").unwrap(), &gf),
        Err(Error::ParameterUnavailable("varpi".into(), 3))
    );
    assert!(materialize_rep(&alg, &row(Group::G2, "1").unwrap(), &Gf::new(2).unwrap()).is_err());
}

#[test]
fn g2_census_over_f3() {
    let c = nilpotent_sweep_g2(3).unwrap();
    let h = c.histogram();
    let sizes: Vec<u64> = h.keys().copied().collect();
    assert_eq!(sizes, vec![1, 728, 6552, 8736, 17472, 26208, 471744]);
    assert!(h.values().all(|&m| m == 1));
    assert_eq!(c.total, 531441);
}

#[test]
fn g2_reps_are_disjoint() {
    let r = rep_orbits_disjoint(&g2(), 3, &["1", "2,1", "2,2", "2,3", "3", "4", "5"], 1 << 22).unwrap();
    assert!(r.disjoint());
    for o in &r.orbits {
        if o.name != "xi_2,1" {
            assert_eq!(o.size, o.expected, "{}", o.name);
        }
    }
}

#[test]
fn f4_small_orbits() {
    let alg = f4();
    let r = rep_orbits_disjoint(&alg, 2, &["17", "16,1", "16,2", "18"], 1 << 23).unwrap();
    assert!(r.disjoint());
    assert!(r.coincident.is_empty() && r.unavailable.is_empty());
    let sizes: Vec<(String, u64)> = r.orbits.iter().map(|o| (o.name.clone(), o.size)).collect();
    assert_eq!(
        sizes,
        vec![
            ("xi_17".to_string(), 69615),
            ("xi_16,1".to_string(), 2506140),
            ("xi_16,2".to_string(), 1949220),
            ("xi_18".to_string(), 1),
        ]
    );
    assert!(r.orbits.iter().all(|o| o.size == o.expected));
}

#[test]
fn bfs_cap() {
    let alg = f4();
    let act = CoadjointAction::new(&alg, 2).unwrap();
    let v = materialize_rep(&alg, &row(Group::F4, "17").unwrap(), &act.gf).unwrap();
    let r = orbit_bfs(&act, &v, 100, None);
    assert!(!r.complete);
    assert_eq!(orbit_bfs(&act, &[0; 52], 100, None), BfsResult { size: 1, complete: true });
    assert!(CoadjointAction::new(&alg, 3).is_err());
}
