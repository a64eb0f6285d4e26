//! Definition-level oracles and random instance generators shared by the integration tests.
//! Nothing here goes through the Plücker plans, the canonical forms or the enumerator.

#![allow(dead_code)]

use flagtract::subset::{self, Mask};
use flagtract::{ClassicalMatroid, Element, FMatroid, FormalSum, GpFunction, Tract};
use num_rational::BigRational;
use num_traits::ToPrimitive;
use rand::Rng;

/// `φ` on an arbitrary tuple: zero on repeats, otherwise the stored value times `ε` to the
/// number of inversions.
pub fn eval(g: &GpFunction, tuple: &[usize]) -> Element {
    let t = g.tract();
    let mut inversions = 0;
    for i in 0..tuple.len() {
        for j in i + 1..tuple.len() {
            if tuple[i] == tuple[j] {
                return t.zero();
            }
            if tuple[i] > tuple[j] {
                inversions += 1;
            }
        }
    }
    let mask: Mask = tuple.iter().fold(0, |m, &e| m | 1 << e);
    let v = g.value(mask).clone();
    if inversions % 2 == 1 {
        v.mul(&t.epsilon()).unwrap()
    } else {
        v
    }
}

/// All tuples in `{0..n}^len`.
pub fn tuples(n: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..n).map(move |e| {
                    let mut u = t.clone();
                    u.push(e);
                    u
                })
            })
            .collect();
    }
    out
}

/// `Σ_k ε^k ν(y - y_k) μ(y_k, x)` over every `x ∈ E^{r-1}`, `y ∈ E^{w+1}`.
pub fn naive_flag_relations(nu: &GpFunction, mu: &GpFunction) -> bool {
    let t = nu.tract();
    let (n, w, r) = (nu.ground_size(), nu.rank(), mu.rank());
    if r == 0 {
        return true;
    }
    let ys = tuples(n, w + 1);
    tuples(n, r - 1).iter().all(|x| {
        ys.iter().all(|y| {
            let mut sum = FormalSum::new(t);
            for k in 0..=w {
                let rest: Vec<usize> = y.iter().enumerate().filter(|&(i, _)| i != k).map(|(_, &v)| v).collect();
                let mut head = vec![y[k]];
                head.extend_from_slice(x);
                let mut term = eval(nu, &rest).mul(&eval(mu, &head)).unwrap();
                if (k + 1) % 2 == 1 {
                    term = term.mul(&t.epsilon()).unwrap();
                }
                sum.push(term).unwrap();
            }
            t.nullset_contains(&sum)
        })
    })
}

pub fn naive_gp(g: &GpFunction) -> bool {
    g.values().iter().any(|v| !v.is_zero()) && naive_flag_relations(g, g)
}

pub fn naive_quotient(big: &FMatroid, small: &FMatroid) -> bool {
    naive_flag_relations(big.gp(), small.gp())
}

/// Every function on the `r`-subsets with values in `values`.
pub fn all_functions(t: Tract, n: usize, r: usize) -> Vec<GpFunction> {
    let mut values = vec![t.zero()];
    values.extend(t.units().unwrap());
    let len = subset::binomial(n, r);
    let mut out = Vec::new();
    let mut idx = vec![0usize; len];
    loop {
        let v = idx.iter().map(|&i| values[i].clone()).collect();
        out.push(GpFunction::new(n, r, t, v).unwrap());
        let mut k = 0;
        loop {
            if k == len {
                return out;
            }
            idx[k] += 1;
            if idx[k] < values.len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

/// Number of matroids of rank `r` on `n` elements by brute force over all functions,
/// divided by the size of the unit group.
pub fn naive_matroid_count(t: Tract, n: usize, r: usize) -> usize {
    let valid = all_functions(t, n, r).iter().filter(|g| naive_gp(g)).count();
    let units = t.units().unwrap().len();
    assert_eq!(valid % units, 0);
    valid / units
}

/// Phase nullset decided numerically: `Σ α_i u_i = 0` with `α > 0` fails exactly when some
/// `y` has `y·u_i ≥ 0` for all `i` with one strict, and such a `y` can be taken among `u_k`
/// and `±u_k^⊥`.
pub fn gordan_phase_null(angles: &[BigRational]) -> bool {
    if angles.is_empty() {
        return true;
    }
    let pts: Vec<(f64, f64)> = angles
        .iter()
        .map(|a| {
            let th = a.to_f64().unwrap() * std::f64::consts::PI;
            (th.cos(), th.sin())
        })
        .collect();
    let tol = 1e-9;
    let separates = |y: (f64, f64)| {
        let dots: Vec<f64> = pts.iter().map(|p| p.0 * y.0 + p.1 * y.1).collect();
        dots.iter().all(|&d| d >= -tol) && dots.iter().any(|&d| d > tol)
    };
    !pts.iter().any(|&(a, b)| separates((a, b)) || separates((-b, a)) || separates((b, -a)))
}

/// Determinant of a small integer matrix by cofactor expansion.
pub fn det(m: &[Vec<i64>]) -> i64 {
    match m.len() {
        0 => 1,
        1 => m[0][0],
        k => (0..k)
            .map(|j| {
                let minor: Vec<Vec<i64>> =
                    m[1..].iter().map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &v)| v).collect()).collect();
                let s = if j % 2 == 0 { 1 } else { -1 };
                s * m[0][j] * det(&minor)
            })
            .sum(),
    }
}

/// Maximal minors of the first `r` rows of `a`, as values over sign or `F_p`.
pub fn minors_gp(a: &[Vec<i64>], n: usize, r: usize, t: Tract) -> Option<GpFunction> {
    let to_elem = |d: i64| match t {
        Tract::Sign => Element::sign(d.signum() as i8),
        Tract::FiniteField(p) => Element::residue(p, d.rem_euclid(p as i64) as u32).unwrap(),
        _ => unreachable!("matrix instances are over sign or prime fields"),
    };
    let g = GpFunction::from_fn(n, r, t, |cols| {
        let sub: Vec<Vec<i64>> = a[..r].iter().map(|row| cols.iter().map(|&c| row[c]).collect()).collect();
        to_elem(det(&sub))
    })
    .unwrap();
    (!g.is_zero()).then_some(g)
}

pub fn random_matrix<R: Rng>(rng: &mut R, rows: usize, n: usize) -> Vec<Vec<i64>> {
    (0..rows).map(|_| (0..n).map(|_| rng.gen_range(-2..=2)).collect()).collect()
}

/// A flag over `t` from nested row prefixes of a random integer matrix.
pub fn random_realizable_flag<R: Rng>(rng: &mut R, t: Tract, ranks: &[usize], n: usize) -> flagtract::FlagMatroid {
    loop {
        let a = random_matrix(rng, *ranks.last().unwrap(), n);
        let comps: Option<Vec<FMatroid>> = ranks
            .iter()
            .map(|&r| minors_gp(&a, n, r, t).map(|g| FMatroid::new(g).expect("minors are Grassmann-Pluecker")))
            .collect();
        if let Some(c) = comps {
            if let Ok(f) = flagtract::FlagMatroid::new(c) {
                return f;
            }
        }
    }
}

pub fn random_realizable<R: Rng>(rng: &mut R, t: Tract, r: usize, n: usize) -> FMatroid {
    random_realizable_flag(rng, t, &[r], n).components()[0].clone()
}

/// Random subset of `0..n`.
pub fn random_mask<R: Rng>(rng: &mut R, n: usize) -> Mask {
    rng.gen_range(0..1u32 << n)
}

pub fn all_classical(n: usize) -> Vec<ClassicalMatroid> {
    (0..=n).flat_map(|r| ClassicalMatroid::all(n, r).unwrap()).collect()
}
