use std::collections::BTreeSet;

use nilorb::checks;
use nilorb::springer::{gamma_star, gamma_star_inv, phi, psi_star, unip_from_symbol};
use nilorb::{Bipartition, Family, LieType, OrbitSymbol, Partition, UnipotentClass};

const BC: [LieType; 2] = [LieType::B, LieType::C];

fn families(ty: LieType) -> (Family, Family) {
    match ty {
        LieType::B => (Family::XB2, Family::XB1),
        _ => (Family::XC2, Family::XC1),
    }
}

fn bp(mu: &[u32], nu: &[u32]) -> Bipartition {
    Bipartition::from_parts(mu.to_vec(), nu.to_vec()).unwrap()
}

fn class(ty: LieType, parts: &[u32]) -> UnipotentClass {
    UnipotentClass::new(ty, Partition::new(parts.to_vec()).unwrap()).unwrap()
}

#[test]
fn gamma_is_a_bijection_onto_its_family() {
    for ty in BC {
        for n in 0..=8 {
            let c = checks::springer_bijection(ty, n);
            assert!(c.ok, "{}: {}", c.name, c.detail);
        }
    }
}

#[test]
fn gamma_inverse_round_trips() {
    for ty in BC {
        for n in 0..=6 {
            for s in OrbitSymbol::enumerate(ty, n) {
                assert_eq!(gamma_star_inv(&gamma_star(&s), ty, n).unwrap(), s);
            }
        }
    }
    assert!(gamma_star_inv(&bp(&[1], &[3]), LieType::C, 4).is_err());
}

#[test]
fn gamma_examples() {
    assert_eq!(gamma_star(&OrbitSymbol::c(vec![2, 2], &[2]).unwrap()), bp(&[2], &[]));
    assert_eq!(gamma_star(&OrbitSymbol::c(vec![2, 2], &[1]).unwrap()), bp(&[1], &[1]));
    assert_eq!(gamma_star(&OrbitSymbol::b(1, vec![2, 2], &[2]).unwrap()), bp(&[1], &[2]));
    assert_eq!(gamma_star(&OrbitSymbol::b(0, vec![3, 3], &[3]).unwrap()), bp(&[], &[3]));
}

#[test]
fn phi_is_an_increasing_retraction() {
    for ty in BC {
        let (domain, image) = families(ty);
        for n in 0..=8 {
            for t in Bipartition::all(n).into_iter().filter(|t| t.in_family(domain)) {
                let p = phi(&t, ty).unwrap();
                assert!(p.in_family(image));
                assert!(t.leq(&p).unwrap(), "{t} ≰ Φ = {p}");
                assert_eq!(phi(&p, ty).unwrap(), p);
            }
        }
    }
}

#[test]
fn phi_is_the_least_upper_bound_in_the_image() {
    for ty in BC {
        let (domain, image) = families(ty);
        for n in 0..=6 {
            let all = Bipartition::all(n);
            let tops: Vec<&Bipartition> = all.iter().filter(|t| t.in_family(image)).collect();
            for t in all.iter().filter(|t| t.in_family(domain)) {
                let p = phi(t, ty).unwrap();
                for top in &tops {
                    if t.leq(top).unwrap() {
                        assert!(p.leq(top).unwrap(), "Φ({t}) = {p} ≰ {top}");
                    }
                }
            }
        }
    }
}

#[test]
fn phi_outside_domain() {
    assert!(phi(&bp(&[1], &[3]), LieType::C).is_err());
    assert!(phi(&bp(&[1], &[]), LieType::D).is_err());
}

#[test]
fn psi_is_compatible_with_phi() {
    for ty in BC {
        for n in 0..=8 {
            for s in OrbitSymbol::enumerate(ty, n) {
                let via_phi = unip_from_symbol(&phi(&gamma_star(&s), ty).unwrap(), ty).unwrap();
                assert_eq!(psi_star(&s).unwrap(), via_phi, "{s}");
            }
        }
    }
}

#[test]
fn unipotent_labels_are_a_bijection() {
    for ty in BC {
        let (_, image) = families(ty);
        for n in 0..=8 {
            let specials: Vec<Bipartition> = Bipartition::all(n).into_iter().filter(|t| t.in_family(image)).collect();
            let classes: BTreeSet<UnipotentClass> =
                specials.iter().map(|t| unip_from_symbol(t, ty).unwrap()).collect();
            assert_eq!(classes.len(), specials.len());
            assert_eq!(classes, UnipotentClass::enumerate(ty, n).into_iter().collect());
        }
    }
}

#[test]
fn psi_examples() {
    assert_eq!(psi_star(&OrbitSymbol::zero(LieType::C, 2)).unwrap(), class(LieType::C, &[1, 1, 1, 1]));
    assert_eq!(psi_star(&OrbitSymbol::c(vec![2, 2], &[2]).unwrap()).unwrap(), class(LieType::C, &[4]));
    assert_eq!(psi_star(&OrbitSymbol::b(1, vec![2, 2], &[2]).unwrap()).unwrap(), class(LieType::B, &[3, 3, 1]));
    assert_eq!(psi_star(&OrbitSymbol::b(0, vec![3, 3], &[3]).unwrap()).unwrap(), class(LieType::B, &[3, 3, 1]));
    assert_eq!(psi_star(&OrbitSymbol::b(2, vec![], &[]).unwrap()).unwrap(), class(LieType::B, &[5]));
}

#[test]
fn unipotent_counts() {
    let c: Vec<usize> = (0..=5).map(|n| UnipotentClass::enumerate(LieType::C, n).len()).collect();
    let b: Vec<usize> = (0..=5).map(|n| UnipotentClass::enumerate(LieType::B, n).len()).collect();
    assert_eq!(c, vec![1, 2, 4, 8, 14, 24]);
    assert_eq!(b, vec![1, 2, 4, 7, 13, 21]);
}
