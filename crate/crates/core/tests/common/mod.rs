use coxwords::classify::longest_element;
use coxwords::matrix::{Automorphism, CoxeterMatrix, Generator, Word};
use coxwords::twist::{Twist, TwistedInvolution};
use coxwords::CoxeterSystem;

pub fn twist_of(sys: &CoxeterSystem, images: Vec<Generator>) -> Twist<'_> {
    let theta = Automorphism::new(images, sys.matrix()).unwrap();
    Twist::new(sys, theta).unwrap()
}

pub fn longest_ti(twist: &Twist<'_>) -> TwistedInvolution {
    let all: Word = twist.system().matrix().generators().collect();
    let w0 = longest_element(twist.system(), &all).unwrap();
    twist.twisted_involution(w0).unwrap()
}

fn identity_images(rank: usize) -> Vec<Generator> {
    (0..rank as Generator).collect()
}

fn reversal_images(rank: usize) -> Vec<Generator> {
    (0..rank as Generator).rev().collect()
}

/// The finite systems of the sufficiency sweep, each with the twists it is
/// swept under.
pub fn finite_sweep() -> Vec<(CoxeterMatrix, Vec<Vec<Generator>>)> {
    let mut cases = vec![
        (
            CoxeterMatrix::type_a(3),
            vec![identity_images(3), reversal_images(3)],
        ),
        (
            CoxeterMatrix::type_a(4),
            vec![identity_images(4), reversal_images(4)],
        ),
        (CoxeterMatrix::type_b(3), vec![identity_images(3)]),
        (CoxeterMatrix::type_b(4), vec![identity_images(4)]),
        (
            CoxeterMatrix::type_d(4),
            vec![identity_images(4), vec![1, 0, 2, 3]],
        ),
        (CoxeterMatrix::type_h(3), vec![identity_images(3)]),
        (
            CoxeterMatrix::type_f4(),
            vec![identity_images(4), reversal_images(4)],
        ),
    ];
    for m in 2..=7 {
        cases.push((
            CoxeterMatrix::type_i2(m),
            vec![identity_images(2), reversal_images(2)],
        ));
    }
    cases
}

/// Affine triangle: every bond 3.
pub fn affine_a2() -> CoxeterMatrix {
    CoxeterMatrix::from_rows(&[vec![1, 3, 3], vec![3, 1, 3], vec![3, 3, 1]]).unwrap()
}

/// Right-angled rank 4: two infinite bonds, everything else commutes.
pub fn right_angled_mixed() -> CoxeterMatrix {
    CoxeterMatrix::from_rows(&[
        vec![1, 0, 2, 2],
        vec![0, 1, 2, 2],
        vec![2, 2, 1, 0],
        vec![2, 2, 0, 1],
    ])
    .unwrap()
}

/// Infinite dihedral group.
pub fn infinite_dihedral() -> CoxeterMatrix {
    CoxeterMatrix::from_rows(&[vec![1, 0], vec![0, 1]]).unwrap()
}
