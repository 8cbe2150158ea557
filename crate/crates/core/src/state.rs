//! State-vector oracle for hypergraph states.
//!
//! The exact track keeps `sqrt(2^n) * |g>` as a vector of signs and derives the
//! single-qubit reduced density matrix as a rational. The float track carries
//! complex amplitudes so that arbitrary local unitaries can be applied.
//!
//! Basis index `x` reads `x_1` as its least significant bit, matching
//! [`crate::weight::TruthTable`].

use num_complex::Complex64;
use num_traits::Signed;
use rand::Rng;
use rand_distr::StandardNormal;

use crate::error::{HyperError, Result};
use crate::hypergraph::{check_dense, EdgeMask, Hypergraph};
use crate::rational::{half, quarter, Rational};

/// Tolerance for accepting a 2x2 matrix as unitary.
pub const UNITARY_TOLERANCE: f64 = 1e-10;

/// Tolerance for accepting a user-supplied amplitude vector as normalized.
pub const NORM_TOLERANCE: f64 = 1e-12;

/// A 2x2 complex matrix, row major.
pub type Mat2 = [[Complex64; 2]; 2];

/// Signs `(-1)^(u(g)(x))` of the equally weighted state.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignVector {
    n: usize,
    signs: Vec<i8>,
}

impl SignVector {
    /// `|+>^n`.
    pub fn plus(n: usize) -> Result<Self> {
        check_dense(n)?;
        Ok(SignVector {
            n,
            signs: vec![1; 1 << n],
        })
    }

    pub fn from_signs(n: usize, signs: Vec<i8>) -> Result<Self> {
        check_dense(n)?;
        if signs.len() != 1 << n {
            return Err(HyperError::Invariant(format!(
                "sign vector of length {} for {n} qubits",
                signs.len()
            )));
        }
        if let Some(bad) = signs.iter().find(|s| **s != 1 && **s != -1) {
            return Err(HyperError::Invariant(format!("sign entry {bad} is not ±1")));
        }
        Ok(SignVector { n, signs })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    /// Number of `-1` entries, which is `hw(g)` for `build_state(g)`.
    pub fn negative_count(&self) -> u64 {
        self.signs.iter().filter(|s| **s < 0).count() as u64
    }

    fn flip(&mut self, e: EdgeMask) {
        let bits = e.bits() as usize;
        for (x, s) in self.signs.iter_mut().enumerate() {
            if x & bits == bits {
                *s = -*s;
            }
        }
    }
}

/// `|g> = prod_{e in E} Z_e |+>^n`, applied gate by gate.
pub fn build_state(g: &Hypergraph) -> Result<SignVector> {
    let mut sv = SignVector::plus(g.n())?;
    for &e in g.edges() {
        sv.flip(e);
    }
    Ok(sv)
}

/// Applies `Z_e`: negates every entry whose index has all bits of `e` set.
/// `Z_∅` negates everything.
pub fn apply_hyperedge_gate(sv: &SignVector, e: EdgeMask) -> Result<SignVector> {
    if !e.fits(sv.n) {
        return Err(HyperError::EdgeOutOfRange {
            mask: e.bits(),
            n: sv.n,
        });
    }
    let mut out = sv.clone();
    out.flip(e);
    Ok(out)
}

/// `rho_t = [[1/2, a], [a, 1/2]]` for a hypergraph state.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ReducedDensity1Q {
    a: Rational,
}

impl ReducedDensity1Q {
    pub fn new(a: Rational) -> Self {
        ReducedDensity1Q { a }
    }

    /// Off-diagonal element.
    pub fn a(&self) -> Rational {
        self.a
    }

    pub fn matrix(&self) -> [[Rational; 2]; 2] {
        [[half(), self.a], [self.a, half()]]
    }

    /// `1/4 - a^2`.
    pub fn det(&self) -> Rational {
        quarter() - self.a * self.a
    }

    /// Eigenvalues are `1/2 ± |a|`; this is the smaller one.
    pub fn smallest_eigenvalue(&self) -> Rational {
        half() - self.a.abs()
    }
}

/// Exact partial trace onto qubit `t`:
/// `a = 2^-n * sum_rest signs[x_t = 0] * signs[x_t = 1]`.
pub fn reduced_density(sv: &SignVector, t: usize) -> Result<ReducedDensity1Q> {
    if t == 0 || t > sv.n {
        return Err(HyperError::VertexOutOfRange { vertex: t, n: sv.n });
    }
    let bit = 1usize << (t - 1);
    let sum: i64 = (0..sv.signs.len())
        .filter(|x| x & bit == 0)
        .map(|x| i64::from(sv.signs[x]) * i64::from(sv.signs[x | bit]))
        .sum();
    Ok(ReducedDensity1Q {
        a: Rational::new(i128::from(sum), 1i128 << sv.n),
    })
}

/// Complex amplitudes of an `n`-qubit pure state.
#[derive(Clone, Debug, PartialEq)]
pub struct AmplitudeVector {
    n: usize,
    amps: Vec<Complex64>,
}

impl AmplitudeVector {
    pub fn from_amplitudes(n: usize, amps: Vec<Complex64>) -> Result<Self> {
        check_dense(n)?;
        if amps.len() != 1 << n {
            return Err(HyperError::Invariant(format!(
                "amplitude vector of length {} for {n} qubits",
                amps.len()
            )));
        }
        let av = AmplitudeVector { n, amps };
        let norm = av.norm_sqr();
        if (norm - 1.0).abs() > NORM_TOLERANCE {
            return Err(HyperError::Invariant(format!("state norm {norm} is not 1")));
        }
        Ok(av)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum()
    }

    fn check_qubit(&self, t: usize) -> Result<usize> {
        if t == 0 || t > self.n {
            return Err(HyperError::VertexOutOfRange {
                vertex: t,
                n: self.n,
            });
        }
        Ok(1 << (t - 1))
    }
}

/// `amps[x] = signs[x] / sqrt(2^n)`.
pub fn to_amplitudes(sv: &SignVector) -> AmplitudeVector {
    let scale = (sv.signs.len() as f64).sqrt().recip();
    AmplitudeVector {
        n: sv.n,
        amps: sv
            .signs
            .iter()
            .map(|&s| Complex64::new(f64::from(s) * scale, 0.0))
            .collect(),
    }
}

/// Largest entry of `|u u^† - I|`.
pub fn unitarity_deviation(u: &Mat2) -> f64 {
    let mut worst = 0.0f64;
    for i in 0..2 {
        for j in 0..2 {
            let entry = u[i][0] * u[j][0].conj() + u[i][1] * u[j][1].conj();
            let target = if i == j { 1.0 } else { 0.0 };
            worst = worst.max((entry - target).norm());
        }
    }
    worst
}

/// Applies `u` on qubit `t` and the identity elsewhere.
pub fn apply_local_unitary(av: &AmplitudeVector, t: usize, u: &Mat2) -> Result<AmplitudeVector> {
    let bit = av.check_qubit(t)?;
    let deviation = unitarity_deviation(u);
    if deviation > UNITARY_TOLERANCE {
        return Err(HyperError::NonUnitary { deviation });
    }
    let mut amps = av.amps.clone();
    for x in (0..amps.len()).filter(|x| x & bit == 0) {
        let (a0, a1) = (av.amps[x], av.amps[x | bit]);
        amps[x] = u[0][0] * a0 + u[0][1] * a1;
        amps[x | bit] = u[1][0] * a0 + u[1][1] * a1;
    }
    Ok(AmplitudeVector { n: av.n, amps })
}

/// Partial trace over every qubit except `t`.
pub fn reduced_density_float(av: &AmplitudeVector, t: usize) -> Result<Mat2> {
    let bit = av.check_qubit(t)?;
    let zero = Complex64::new(0.0, 0.0);
    let (mut r00, mut r01, mut r11) = (zero, zero, zero);
    for x in (0..av.amps.len()).filter(|x| x & bit == 0) {
        let (a0, a1) = (av.amps[x], av.amps[x | bit]);
        r00 += a0 * a0.conj();
        r01 += a0 * a1.conj();
        r11 += a1 * a1.conj();
    }
    Ok([[r00, r01], [r01.conj(), r11]])
}

pub fn det2(m: &Mat2) -> Complex64 {
    m[0][0] * m[1][1] - m[0][1] * m[1][0]
}

pub fn identity2() -> Mat2 {
    let (o, l) = (Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0));
    [[l, o], [o, l]]
}

pub fn pauli_z() -> Mat2 {
    let (o, l) = (Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0));
    [[l, o], [o, -l]]
}

pub fn hadamard() -> Mat2 {
    let h = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
    [[h, h], [h, -h]]
}

/// Random 2x2 unitary: Gram-Schmidt on the columns of a complex Gaussian matrix.
pub fn random_unitary<R: Rng + ?Sized>(rng: &mut R) -> Mat2 {
    let mut gauss = || Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal));
    let mut c0 = [gauss(), gauss()];
    let mut c1 = [gauss(), gauss()];
    let norm0 = (c0[0].norm_sqr() + c0[1].norm_sqr()).sqrt();
    c0 = [c0[0] / norm0, c0[1] / norm0];
    let overlap = c0[0].conj() * c1[0] + c0[1].conj() * c1[1];
    c1 = [c1[0] - overlap * c0[0], c1[1] - overlap * c0[1]];
    let norm1 = (c1[0].norm_sqr() + c1[1].norm_sqr()).sqrt();
    c1 = [c1[0] / norm1, c1[1] / norm1];
    [[c0[0], c1[0]], [c0[1], c1[1]]]
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn g(text: &str) -> Hypergraph {
        Hypergraph::parse(text).unwrap()
    }

    #[test]
    fn build_state_examples() {
        assert_eq!(build_state(&g("2:")).unwrap().signs(), &[1, 1, 1, 1]);
        assert_eq!(build_state(&g("2: {1,2}")).unwrap().signs(), &[1, 1, 1, -1]);
        assert!(build_state(&g("3: {}"))
            .unwrap()
            .signs()
            .iter()
            .all(|&s| s == -1));
    }

    #[test]
    fn gate_application() {
        let plus = build_state(&g("2:")).unwrap();
        let cz = apply_hyperedge_gate(&plus, EdgeMask::new(0b11)).unwrap();
        assert_eq!(cz, build_state(&g("2: {1,2}")).unwrap());
        assert_eq!(
            apply_hyperedge_gate(&cz, EdgeMask::new(0b11)).unwrap(),
            plus
        );
        assert!(matches!(
            apply_hyperedge_gate(&plus, EdgeMask::new(0b100)),
            Err(HyperError::EdgeOutOfRange { .. })
        ));
    }

    #[test]
    fn gate_order_is_irrelevant() {
        let fig = g("4: {4} {1,2} {3,4} {2,3,4}");
        let canonical = build_state(&fig).unwrap();
        let edges = fig.edges().to_vec();
        // all 24 permutations of the four gates
        let mut perm = [0usize, 1, 2, 3];
        let mut count = 0;
        loop {
            let mut sv = SignVector::plus(4).unwrap();
            for &i in &perm {
                sv = apply_hyperedge_gate(&sv, edges[i]).unwrap();
            }
            assert_eq!(sv, canonical);
            count += 1;
            if !next_permutation(&mut perm) {
                break;
            }
        }
        assert_eq!(count, 24);
    }

    fn next_permutation(p: &mut [usize]) -> bool {
        let Some(i) = (0..p.len() - 1).rev().find(|&i| p[i] < p[i + 1]) else {
            return false;
        };
        let j = (i + 1..p.len()).rev().find(|&j| p[j] > p[i]).unwrap();
        p.swap(i, j);
        p[i + 1..].reverse();
        true
    }

    #[test]
    fn reduced_density_examples() {
        let fig_a = build_state(&g("4: {4} {1,2} {3,4} {2,3,4}")).unwrap();
        let rho = reduced_density(&fig_a, 4).unwrap();
        assert_eq!(rho.a(), Rational::new(-1, 4));
        assert_eq!(rho.det(), Rational::new(3, 16));

        let empty = build_state(&g("3:")).unwrap();
        for t in 1..=3 {
            assert_eq!(reduced_density(&empty, t).unwrap().a(), half());
        }

        let fig_b = build_state(&g("4: {1,2,4} {1,3,4} {2,3,4}")).unwrap();
        assert_eq!(
            reduced_density(&fig_b, 4).unwrap().a(),
            Rational::from_integer(0)
        );
        assert!(reduced_density(&fig_b, 5).is_err());
    }

    #[test]
    fn global_phase_is_invisible() {
        let fig = g("4: {4} {1,2} {3,4} {2,3,4}");
        let flipped = fig.toggle_edge(EdgeMask::EMPTY).unwrap();
        let (a, b) = (build_state(&fig).unwrap(), build_state(&flipped).unwrap());
        for t in 1..=4 {
            assert_eq!(
                reduced_density(&a, t).unwrap(),
                reduced_density(&b, t).unwrap()
            );
        }
    }

    #[test]
    fn eigenvalue_identity() {
        let rho = ReducedDensity1Q::new(Rational::new(-1, 4));
        let l = rho.smallest_eigenvalue();
        assert_eq!(l, Rational::new(1, 4));
        assert_eq!(rho.det(), l * (Rational::from_integer(1) - l));
    }

    #[test]
    fn amplitude_examples() {
        let plus1 = to_amplitudes(&SignVector::plus(1).unwrap());
        for a in plus1.amplitudes() {
            assert!((a.re - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-15);
        }
        let cz = to_amplitudes(&build_state(&g("2: {1,2}")).unwrap());
        let re: Vec<f64> = cz.amplitudes().iter().map(|a| a.re).collect();
        assert_eq!(re, vec![0.5, 0.5, 0.5, -0.5]);
        assert!((cz.norm_sqr() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn local_unitary_examples() {
        let fig = g("4: {4} {1,2} {3,4} {2,3,4}");
        let av = to_amplitudes(&build_state(&fig).unwrap());
        assert_eq!(apply_local_unitary(&av, 2, &identity2()).unwrap(), av);

        // Z on qubit t is the loop gate Z_{t}
        for t in 1..=4 {
            let z = apply_local_unitary(&av, t, &pauli_z()).unwrap();
            let loop_t = EdgeMask::from_vertices(4, [t]).unwrap();
            let expected = to_amplitudes(&build_state(&fig.toggle_edge(loop_t).unwrap()).unwrap());
            for (x, y) in z.amplitudes().iter().zip(expected.amplitudes()) {
                assert!((x - y).norm() < 1e-15);
            }
        }

        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let mut state = av.clone();
        for t in [1, 2, 3, 4, 2] {
            let u = random_unitary(&mut rng);
            assert!(unitarity_deviation(&u) < 1e-12);
            state = apply_local_unitary(&state, t, &u).unwrap();
            assert!((state.norm_sqr() - 1.0).abs() < 1e-10);
        }

        let mut bad = identity2();
        bad[0][0] = Complex64::new(2.0, 0.0);
        assert!(matches!(
            apply_local_unitary(&av, 1, &bad),
            Err(HyperError::NonUnitary { .. })
        ));
        assert!(apply_local_unitary(&av, 5, &identity2()).is_err());
    }

    #[test]
    fn float_density_matches_exact() {
        let fig = g("4: {4} {1,2} {3,4} {2,3,4}");
        let sv = build_state(&fig).unwrap();
        let av = to_amplitudes(&sv);
        for t in 1..=4 {
            let exact = reduced_density(&sv, t).unwrap();
            let rho = reduced_density_float(&av, t).unwrap();
            let a = crate::rational::to_f64(&exact.a());
            assert!((rho[0][0].re - 0.5).abs() < 1e-12);
            assert!((rho[1][1].re - 0.5).abs() < 1e-12);
            assert!((rho[0][1] - Complex64::new(a, 0.0)).norm() < 1e-12);
            let det = det2(&rho);
            assert!((det.re - crate::rational::to_f64(&exact.det())).abs() < 1e-12);
        }

        let plus = to_amplitudes(&SignVector::plus(3).unwrap());
        let rho = reduced_density_float(&plus, 2).unwrap();
        for row in rho {
            for v in row {
                assert!((v - Complex64::new(0.5, 0.0)).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn float_density_is_local() {
        let fig = g("4: {4} {1,2} {3,4} {2,3,4}");
        let av = to_amplitudes(&build_state(&fig).unwrap());
        let before = reduced_density_float(&av, 3).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let mut after = av;
        for t in [1, 2, 4] {
            after = apply_local_unitary(&after, t, &random_unitary(&mut rng)).unwrap();
        }
        let after = reduced_density_float(&after, 3).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                assert!((before[i][j] - after[i][j]).norm() < 1e-10);
            }
        }
        let trace = after[0][0] + after[1][1];
        assert!((trace.re - 1.0).abs() < 1e-10);
        assert!((after[0][1] - after[1][0].conj()).norm() < 1e-12);
    }
}
