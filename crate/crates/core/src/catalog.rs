//! Small named examples used by tests, scenarios and the CLI.

use crate::classical::ClassicalMatroid;
use crate::flag::FlagMatroid;
use crate::matroid::{CircuitFamily, FMatroid, GpFunction, TractVector};
use crate::tract::{Element, Tract};

fn angle(num: i64, den: i64) -> Element {
    Element::phase_frac(num, den)
}

fn phase_gp(rank: usize, angles: &[(i64, i64)]) -> FMatroid {
    let values = angles.iter().map(|&(a, b)| angle(a, b)).collect();
    FMatroid::new(GpFunction::new(4, rank, Tract::Phase, values).expect("four elements"))
        .expect("catalog entries are valid")
}

/// Three uniform phase matroids `M_1, M_2, M_3` of ranks 1, 2, 3 on four elements with
/// `M_3 ↠ M_2 ↠ M_1` but not `M_3 ↠ M_1`.
pub fn phase_triple() -> [FMatroid; 3] {
    [
        phase_gp(1, &[(0, 1); 4]),
        // 12, 13, 14, 23, 24, 34
        phase_gp(2, &[(0, 1), (7, 4), (1, 4), (5, 4), (3, 4), (1, 2)]),
        // 123, 124, 134, 234
        phase_gp(3, &[(0, 1), (1, 1), (9, 8), (1, 8)]),
    ]
}

/// The all-ones vector, a cocircuit of `M_1` that fails to be a covector of `M_3`.
pub fn phase_witness_vector() -> TractVector {
    TractVector::new(Tract::Phase, vec![angle(0, 1); 4]).expect("phase coordinates")
}

fn family(n: usize, rows: &[[Option<(i64, i64)>; 4]]) -> CircuitFamily {
    let reps = rows
        .iter()
        .map(|row| {
            let coords = row
                .iter()
                .map(|c| c.map_or(Tract::Phase.zero(), |(a, b)| angle(a, b)))
                .collect();
            TractVector::new(Tract::Phase, coords).expect("phase coordinates")
        })
        .collect();
    CircuitFamily::new(Tract::Phase, n, reps).expect("catalog families are well formed")
}

/// Signature pairs `(C_i, D_i)` of `U_{i,4}` and `U_{4-i,4}` over the phase hyperfield, given
/// as explicit vectors rather than computed from the matroids.
pub fn phase_signatures() -> Vec<(ClassicalMatroid, CircuitFamily, CircuitFamily)> {
    const Z: Option<(i64, i64)> = None;
    let one = Some((0, 1));
    let minus = Some((1, 1));
    let a = |n, d| Some((n, d));
    let c1 = family(
        4,
        &[
            [one, minus, Z, Z],
            [one, Z, minus, Z],
            [one, Z, Z, minus],
            [Z, one, minus, Z],
            [Z, one, Z, minus],
            [Z, Z, one, minus],
        ],
    );
    let d1 = family(4, &[[one, one, one, one]]);
    let c2 = family(
        4,
        &[
            [one, a(3, 2), a(3, 4), Z],
            [one, a(1, 2), Z, a(5, 4)],
            [one, Z, a(3, 4), a(5, 4)],
            [Z, one, a(5, 4), a(3, 4)],
        ],
    );
    let d2 = family(
        4,
        &[
            [one, Z, a(1, 4), a(7, 4)],
            [Z, one, a(7, 4), a(1, 4)],
            [a(7, 4), a(1, 4), one, Z],
            [a(1, 4), a(7, 4), Z, one],
        ],
    );
    let c3 = family(4, &[[one, one, a(7, 8), a(7, 8)]]);
    // The entries at 15/8 make each vector orthogonal to the circuit of `C_3`; a printed
    // value of 9/8 would not be.
    let d3 = family(
        4,
        &[
            [one, minus, Z, Z],
            [a(15, 8), Z, one, Z],
            [Z, a(15, 8), one, Z],
            [Z, Z, one, minus],
            [a(15, 8), Z, Z, one],
            [Z, a(15, 8), Z, one],
        ],
    );
    vec![
        (ClassicalMatroid::uniform(1, 4), c1, d1),
        (ClassicalMatroid::uniform(2, 4), c2, d2),
        (ClassicalMatroid::uniform(3, 4), c3, d3),
    ]
}

fn krasner(n: usize, bases: &[&[usize]]) -> FMatroid {
    FMatroid::from_classical(&ClassicalMatroid::from_lists(n, bases).expect("catalog bases"))
}

/// On `{1, 2}`: `M` with the single basis `{1}` below `N` with the single basis `{1, 2}`.
pub fn krasner_rank_one_two() -> FlagMatroid {
    FlagMatroid::new(vec![krasner(2, &[&[1]]), krasner(2, &[&[1, 2]])]).expect("valid flag")
}

/// A rank `(1, 2)` Krasner flag on three elements, binary and orientable: bases `{1}, {2}`
/// below `U_{2,3}`.
pub fn regular_flag() -> FlagMatroid {
    FlagMatroid::new(vec![
        krasner(3, &[&[1], &[2]]),
        FMatroid::all_ones(3, 2, Tract::Krasner).expect("uniform"),
    ])
    .expect("valid flag")
}

/// `(U_{1,4}, U_{2,4})` over the Krasner hyperfield, which has no GF(2) representation.
pub fn uniform_flag_1_2_4() -> FlagMatroid {
    FlagMatroid::new(vec![
        FMatroid::all_ones(4, 1, Tract::Krasner).expect("uniform"),
        FMatroid::all_ones(4, 2, Tract::Krasner).expect("uniform"),
    ])
    .expect("valid flag")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::flag::{quotient_check, FlagMode};
    use crate::matroid::circuits::dual_pair_validate;

    #[test]
    fn triple_relations() {
        let [m1, m2, m3] = phase_triple();
        assert!(quotient_check(&m2, &m1).unwrap().ok);
        assert!(quotient_check(&m3, &m2).unwrap().ok);
        assert!(!quotient_check(&m3, &m1).unwrap().ok);
        assert!(!m3.is_covector(&phase_witness_vector()).unwrap());
        assert!(m2.is_covector(&phase_witness_vector()).unwrap());
        let f = FlagMatroid::new(vec![m1, m2, m3]).unwrap();
        assert!(!f.validate(FlagMode::Pairwise).unwrap().ok);
        assert!(f.validate(FlagMode::Adjacent).is_err());
    }

    #[test]
    fn listed_signatures_match_computed_ones() {
        let triple = phase_triple();
        for ((m, c, d), mi) in phase_signatures().iter().zip(&triple) {
            assert_eq!(&mi.circuits(), c);
            assert_eq!(&mi.cocircuits(), d);
            assert!(dual_pair_validate(m, c, d).ok);
        }
    }

    #[test]
    fn printed_third_cocircuit_angle_is_not_orthogonal() {
        let (m, c, _) = &phase_signatures()[2];
        let printed = TractVector::new(
            Tract::Phase,
            vec![angle(9, 8), Tract::Phase.zero(), angle(0, 1), Tract::Phase.zero()],
        )
        .unwrap();
        assert!(!c.representatives()[0].is_orthogonal(&printed).unwrap());
        assert!(m.rank() == 3);
    }

    #[test]
    fn fixtures_are_flags() {
        for f in [krasner_rank_one_two(), regular_flag(), uniform_flag_1_2_4()] {
            assert!(f.validate(FlagMode::Pairwise).unwrap().ok);
        }
    }
}
