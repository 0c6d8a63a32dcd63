use nilorb::checks;
use nilorb::{LieType, OrbitSymbol, SplitLabel};
use proptest::prelude::*;

const BC: [LieType; 2] = [LieType::B, LieType::C];

#[test]
fn catalogue_sizes() {
    let count = |ty, n| OrbitSymbol::enumerate(ty, n).len();
    let c: Vec<usize> = (0..=6).map(|n| count(LieType::C, n)).collect();
    let b: Vec<usize> = (0..=6).map(|n| count(LieType::B, n)).collect();
    let d: Vec<usize> = (0..=6).map(|n| count(LieType::D, n)).collect();
    assert_eq!(c, vec![1, 2, 4, 8, 15, 26, 45]);
    assert_eq!(b, c);
    assert_eq!(d, vec![1, 1, 4, 5, 12, 16, 32]);
}

#[test]
fn small_catalogues() {
    let c1 = OrbitSymbol::enumerate(LieType::C, 1);
    assert!(c1.contains(&OrbitSymbol::c(vec![1, 1], &[1]).unwrap()));
    assert!(c1.contains(&OrbitSymbol::c(vec![1, 1], &[0]).unwrap()));
    let d2 = OrbitSymbol::enumerate(LieType::D, 2);
    let split: Vec<_> = d2.iter().filter(|s| s.label.is_some()).collect();
    assert_eq!(split.len(), 2);
    assert_eq!(split[0].label, Some(SplitLabel::I));
    assert!(OrbitSymbol::d(vec![], &[], None).unwrap().is_zero());
}

#[test]
fn validation() {
    assert!(OrbitSymbol::c(vec![2, 2], &[2]).is_ok());
    assert!(OrbitSymbol::c(vec![2, 2], &[0]).is_err());
    assert!(OrbitSymbol::c(vec![2, 1, 1], &[1, 1]).is_err());
    assert!(OrbitSymbol::b(0, vec![3, 3], &[2]).is_err());
    assert!(OrbitSymbol::b(1, vec![3, 3], &[2]).is_ok());
    assert!(OrbitSymbol::d(vec![2, 2], &[1], None).is_err());
    assert!(OrbitSymbol::d(vec![2, 2], &[1], Some(SplitLabel::II)).is_ok());
}

#[test]
fn centralizer_parity() {
    for ty in BC {
        for n in 0..=8 {
            for s in OrbitSymbol::enumerate(ty, n) {
                let c = s.centralizer_dim().unwrap();
                assert!(c >= n && (c - n) % 2 == 0, "{s}: dim Z = {c}");
            }
        }
    }
}

#[test]
fn centralizer_examples() {
    assert_eq!(OrbitSymbol::zero(LieType::C, 2).centralizer_dim().unwrap(), 10);
    assert_eq!(OrbitSymbol::c(vec![2, 2], &[2]).unwrap().centralizer_dim().unwrap(), 2);
    assert_eq!(OrbitSymbol::b(2, vec![], &[]).unwrap().centralizer_dim().unwrap(), 2);
    assert!(OrbitSymbol::zero(LieType::D, 2).centralizer_dim().is_err());
}

#[test]
fn closure_order_sanity() {
    for ty in [LieType::B, LieType::C, LieType::D] {
        for n in 0..=6 {
            let c = checks::closure_sanity(ty, n);
            assert!(c.ok, "{}: {}", c.name, c.detail);
        }
    }
}

#[test]
fn closure_examples() {
    let top = OrbitSymbol::c(vec![2, 2], &[2]).unwrap();
    let mid = OrbitSymbol::c(vec![2, 2], &[1]).unwrap();
    assert!(mid.closure_leq(&top).unwrap());
    assert!(!top.closure_leq(&mid).unwrap());
    assert!(OrbitSymbol::zero(LieType::C, 2).closure_leq(&mid).unwrap());
    assert!(top.closure_leq(&OrbitSymbol::zero(LieType::C, 3)).is_err());
    let i = OrbitSymbol::d(vec![2, 2], &[1], Some(SplitLabel::I)).unwrap();
    let ii = OrbitSymbol::d(vec![2, 2], &[1], Some(SplitLabel::II)).unwrap();
    assert!(!i.closure_leq(&ii).unwrap() && !ii.closure_leq(&i).unwrap());
}

#[test]
fn hasse_b2_is_a_chain() {
    let h = OrbitSymbol::hasse(LieType::B, 2).unwrap();
    assert_eq!(h.len(), 3);
    assert!(h[0].0.is_zero() || h.iter().any(|(a, _)| a.is_zero()));
}

#[test]
fn induction_embeds_the_order() {
    for ty in BC {
        for n in 0..=4 {
            let orbits = OrbitSymbol::enumerate(ty, n);
            for k in 0..=3 {
                let ind: Vec<OrbitSymbol> = orbits.iter().map(|s| s.induce(k).unwrap()).collect();
                for i in 0..orbits.len() {
                    assert_eq!(ind[i].n, n + k);
                    for j in 0..orbits.len() {
                        assert_eq!(
                            orbits[i].closure_leq(&orbits[j]).unwrap(),
                            ind[i].closure_leq(&ind[j]).unwrap(),
                            "{} vs {} under k={k}",
                            orbits[i],
                            orbits[j]
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn induction_examples() {
    let zero = OrbitSymbol::zero(LieType::C, 0);
    assert_eq!(zero.induce(1).unwrap(), OrbitSymbol::c(vec![1, 1], &[1]).unwrap());
    assert_eq!(OrbitSymbol::zero(LieType::B, 0).induce(1).unwrap(), OrbitSymbol::b(1, vec![], &[]).unwrap());
    assert!(OrbitSymbol::zero(LieType::D, 1).induce(1).is_err());
}

#[test]
fn json_shape() {
    let s = OrbitSymbol::b(1, vec![2, 2], &[2]).unwrap();
    assert_eq!(s.to_json(), r#"{"type":"B","n":3,"m":1,"lambda":[2,2],"chi":{"2":2}}"#);
    let bad = r#"{"type":"C","n":2,"lambda":[2,2],"chi":{"2":0}}"#;
    assert!(serde_json::from_str::<OrbitSymbol>(bad).is_err());
}

fn any_symbol() -> impl Strategy<Value = OrbitSymbol> {
    (prop_oneof![Just(LieType::B), Just(LieType::C), Just(LieType::D)], 0u32..=6, any::<prop::sample::Index>())
        .prop_filter_map("empty catalogue", |(ty, n, idx)| {
            let all = OrbitSymbol::enumerate(ty, n);
            (!all.is_empty()).then(|| all[idx.index(all.len())].clone())
        })
}

proptest! {
    #[test]
    fn serde_round_trip(s in any_symbol()) {
        let back: OrbitSymbol = serde_json::from_str(&s.to_json()).unwrap();
        prop_assert_eq!(back, s);
    }

    #[test]
    fn zero_is_below_everything(s in any_symbol()) {
        prop_assert!(OrbitSymbol::zero(s.ty, s.n).closure_leq(&s).unwrap());
    }

    #[test]
    fn chi_extend_is_monotone(s in any_symbol(), k in 0u32..12) {
        prop_assert!(s.chi_extend(k) <= s.chi_extend(k + 1));
        prop_assert!(s.chi_extend(k + 1) - s.chi_extend(k) <= 1);
    }
}
