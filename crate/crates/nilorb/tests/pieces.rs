use nilorb::pieces::{ms_pieces, piece_report, recursion_step, upsilon, upsilon_from_unipotent, UpsilonSeq};
use nilorb::springer::{gamma_star, phi, psi_star};
use nilorb::{Error, LieType, OrbitSymbol};

const BC: [LieType; 2] = [LieType::B, LieType::C];

#[test]
fn upsilon_matches_the_unipotent_class() {
    for ty in BC {
        for n in 0..=8 {
            for s in OrbitSymbol::enumerate(ty, n) {
                let u = upsilon(&s).unwrap();
                assert_eq!(u, upsilon_from_unipotent(&psi_star(&s).unwrap()), "{s}");
                assert_eq!(u.dim(), ty.natural_dim(n));
            }
        }
    }
}

#[test]
fn first_step_sees_the_largest_part() {
    for ty in BC {
        for n in 1..=8 {
            for s in OrbitSymbol::enumerate(ty, n).into_iter().filter(|s| !s.is_zero()) {
                let step = recursion_step(&s).unwrap();
                assert_eq!(step.n_top + 1, psi_star(&s).unwrap().parts.part(1), "{s}");
            }
        }
    }
}

#[test]
fn zero_is_the_base_case() {
    assert_eq!(recursion_step(&OrbitSymbol::zero(LieType::C, 3)), Err(Error::BaseCase));
    assert_eq!(upsilon(&OrbitSymbol::zero(LieType::B, 2)).unwrap(), UpsilonSeq::new(vec![5]));
}

#[test]
fn frozen_upsilons() {
    let c22 = OrbitSymbol::c(vec![2, 2], &[2]).unwrap();
    assert_eq!(upsilon(&c22).unwrap().to_string(), "(0,1,0,1)");
    let b = OrbitSymbol::b(1, vec![2, 2], &[2]).unwrap();
    assert_eq!(upsilon(&b).unwrap().to_string(), "(3,0,2)");
    assert_eq!(upsilon(&OrbitSymbol::b(0, vec![3, 3], &[3]).unwrap()).unwrap().to_string(), "(3,0,2)");
    assert_eq!(upsilon(&OrbitSymbol::b(1, vec![], &[]).unwrap()).unwrap().to_string(), "(1,0,1)");
}

#[test]
fn three_descriptions_coincide() {
    for ty in BC {
        for n in 0..=8 {
            let r = piece_report(ty, n).unwrap();
            assert!(r.agree, "{ty:?}{n}: {:?}", r.discrepancies);
        }
    }
}

#[test]
fn pieces_separate_upsilon() {
    for ty in BC {
        for n in 0..=8 {
            let r = piece_report(ty, n).unwrap();
            for (i, p) in r.pieces.iter().enumerate() {
                assert!(p.members.iter().all(|m| upsilon(m).unwrap() == p.upsilon));
                assert!(r.pieces[i + 1..].iter().all(|o| o.upsilon != p.upsilon));
            }
        }
    }
}

#[test]
fn ms_pieces_are_phi_fibres() {
    for ty in BC {
        for n in 0..=6 {
            for p in ms_pieces(ty, n).unwrap() {
                let top = p.members.iter().map(gamma_star).max_by(|a, b| {
                    if a.leq(b).unwrap() { std::cmp::Ordering::Less } else { std::cmp::Ordering::Greater }
                });
                let top = top.unwrap();
                for m in &p.members {
                    assert_eq!(phi(&gamma_star(m), ty).unwrap(), top, "{m}");
                }
            }
        }
    }
}

#[test]
fn b3_witness() {
    let b3 = piece_report(LieType::B, 3).unwrap();
    let piece = b3.pieces.iter().find(|p| p.label.parts.parts() == [3, 3, 1]).unwrap();
    let mut got = piece.members.clone();
    got.sort();
    let mut want = vec![OrbitSymbol::b(1, vec![2, 2], &[2]).unwrap(), OrbitSymbol::b(0, vec![3, 3], &[3]).unwrap()];
    want.sort();
    assert_eq!(got, want);
    assert_eq!(piece.upsilon.to_string(), "(3,0,2)");
}

#[test]
fn piece_counts() {
    let c: Vec<usize> = (0..=5).map(|n| piece_report(LieType::C, n).unwrap().pieces.len()).collect();
    let b: Vec<usize> = (0..=5).map(|n| piece_report(LieType::B, n).unwrap().pieces.len()).collect();
    assert_eq!(c, vec![1, 2, 4, 8, 14, 24]);
    assert_eq!(b, vec![1, 2, 4, 7, 13, 21]);
}

#[test]
fn type_d_has_no_pieces_here() {
    assert_eq!(piece_report(LieType::D, 2).unwrap_err(), Error::UnsupportedType('D'));
    assert!(ms_pieces(LieType::D, 2).is_err());
}
