//! Semimetric vectors, ambient points and the `ρ_p` distance family.
//!
//! A semimetric on `n` points is stored as the flat vector of its
//! `m = n(n-1)/2` pairwise values in lexicographic pair order
//! `(0,1),(0,2),…,(0,n-1),(1,2),…,(n-2,n-1)`; every module in the crate
//! shares this layout.

use crate::error::Error;
use crate::scalar::{Field, Scalar};
use crate::Result;

/// Number of unordered pairs on `n` points.
pub fn pair_count(n: usize) -> usize {
    n * (n - 1) / 2
}

/// Index of the pair `(i, j)`, `i < j`, in the lexicographic layout.
pub fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * n - i * (i + 1) / 2 + (j - i - 1)
}

/// Inverse of `pair_count`: the point count for a vector of `m` entries.
pub fn point_count_for(m: usize) -> Option<usize> {
    let mut n = 2usize;
    loop {
        let c = pair_count(n);
        if c == m {
            return Some(n);
        }
        if c > m {
            return None;
        }
        n += 1;
    }
}

/// A point of `R^k`.
#[derive(Clone, Debug, PartialEq)]
pub struct AmbientPoint<T> {
    coords: Vec<T>,
}

impl<T: Scalar> AmbientPoint<T> {
    pub fn new(coords: Vec<T>) -> Self {
        AmbientPoint { coords }
    }

    pub fn from_slice(coords: &[T]) -> Self {
        AmbientPoint {
            coords: coords.to_vec(),
        }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[T] {
        &self.coords
    }

    pub fn is_finite(&self) -> bool {
        self.coords.iter().all(|c| c.is_finite())
    }

    pub fn add(&self, other: &Self) -> Self {
        AmbientPoint::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| *a + *b)
                .collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        AmbientPoint::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| *a - *b)
                .collect(),
        )
    }

    pub fn scale(&self, s: T) -> Self {
        AmbientPoint::new(self.coords.iter().map(|a| *a * s).collect())
    }

    pub fn dot(&self, other: &Self) -> T {
        self.coords
            .iter()
            .zip(&other.coords)
            .fold(T::zero(), |acc, (a, b)| acc + *a * *b)
    }

    pub fn norm(&self) -> T {
        self.dot(self).sqrt()
    }

    pub fn dist(&self, other: &Self) -> T {
        self.sub(other).norm()
    }
}

/// Selector for the `ρ_p` metric, `p ∈ (1, ∞)`; `p = 2` is Euclidean.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MetricKind<T> {
    p: T,
}

impl<T: Scalar> MetricKind<T> {
    pub fn new(p: T) -> Result<Self> {
        if !(p > T::one()) || !p.is_finite() {
            return Err(Error::structural(format!(
                "metric exponent must satisfy p > 1, got {p}"
            )));
        }
        Ok(MetricKind { p })
    }

    pub fn euclidean() -> Self {
        MetricKind { p: T::c(2.0) }
    }

    pub fn p(&self) -> T {
        self.p
    }

    pub fn is_euclidean(&self) -> bool {
        self.p == T::c(2.0)
    }
}

/// `ρ_p` distance: `(Σ_α |a_α − b_α|^p)^{1/p}`.
pub fn rho_p<T: Scalar>(a: &AmbientPoint<T>, b: &AmbientPoint<T>, kind: MetricKind<T>) -> Result<T> {
    if a.dim() != b.dim() {
        return Err(Error::structural(format!(
            "dimension mismatch: {} vs {}",
            a.dim(),
            b.dim()
        )));
    }
    if kind.is_euclidean() {
        return Ok(a.dist(b));
    }
    let p = kind.p();
    let sum = a
        .coords()
        .iter()
        .zip(b.coords())
        .fold(T::zero(), |acc, (x, y)| acc + (*x - *y).abs().powf(p));
    Ok(sum.powf(T::one() / p))
}

/// One violated triangle triple `(i, j, k)`, reported with the amount by
/// which the worst inequality of the triple fails.
#[derive(Clone, Debug)]
pub struct TriangleViolation<T> {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub excess: T,
}

/// Outcome of semimetric validation.
#[derive(Clone, Debug)]
pub struct ValidityReport<T> {
    pub ok: bool,
    pub negative_entries: Vec<(usize, usize, T)>,
    pub triangle_violations: Vec<TriangleViolation<T>>,
}

/// Vector of pairwise semimetric values on `n` points.
#[derive(Clone, Debug, PartialEq)]
pub struct SemimetricVector<T> {
    n: usize,
    values: Vec<T>,
}

impl<T: Field> SemimetricVector<T> {
    /// Wraps a flat vector; the length must be triangular.
    pub fn new(values: Vec<T>) -> Result<Self> {
        let n = point_count_for(values.len()).ok_or_else(|| {
            Error::structural(format!(
                "entry count {} is not n(n-1)/2 for any n >= 2",
                values.len()
            ))
        })?;
        Ok(SemimetricVector { n, values })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut values = Vec::with_capacity(pair_count(n));
        for i in 0..n {
            for j in i + 1..n {
                values.push(f(i, j));
            }
        }
        SemimetricVector { n, values }
    }

    pub fn point_count(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    /// Distance between points `i` and `j`; zero on the diagonal.
    pub fn get(&self, i: usize, j: usize) -> T {
        if i == j {
            return T::zero();
        }
        let (i, j) = if i < j { (i, j) } else { (j, i) };
        self.values[pair_index(self.n, i, j)].clone()
    }

    pub fn map<U: Field>(&self, f: impl Fn(&T) -> U) -> SemimetricVector<U> {
        SemimetricVector {
            n: self.n,
            values: self.values.iter().map(f).collect(),
        }
    }

    /// Checks non-negativity and all triangle inequalities within the given
    /// absolute slack.
    pub fn validate(&self, slack: &T) -> ValidityReport<T> {
        let mut negative = Vec::new();
        let mut triangles = Vec::new();
        for i in 0..self.n {
            for j in i + 1..self.n {
                let v = self.get(i, j);
                if v < T::zero() - slack.clone() {
                    negative.push((i, j, v));
                }
            }
        }
        for i in 0..self.n {
            for j in i + 1..self.n {
                for k in j + 1..self.n {
                    let rij = self.get(i, j);
                    let rjk = self.get(j, k);
                    let rik = self.get(i, k);
                    // |r_ij - r_jk| <= r_ik <= r_ij + r_jk covers the triple.
                    let mut excess = T::zero();
                    let upper = rij.clone() + rjk.clone();
                    if rik > upper.clone() + slack.clone() {
                        excess = rik.clone() - upper;
                    }
                    let lower = (rij - rjk).abs();
                    if rik.clone() + slack.clone() < lower {
                        let e = lower - rik;
                        if e > excess {
                            excess = e;
                        }
                    }
                    if excess > T::zero() {
                        triangles.push(TriangleViolation { i, j, k, excess });
                    }
                }
            }
        }
        ValidityReport {
            ok: negative.is_empty() && triangles.is_empty(),
            negative_entries: negative,
            triangle_violations: triangles,
        }
    }
}

/// Validates membership in the semimetric cone with the default slack.
pub fn validate_semimetric<T: Scalar>(r: &SemimetricVector<T>) -> ValidityReport<T> {
    r.validate(&T::c(1e-12))
}

/// Pulls the ambient `ρ_p` metric back through a point configuration.
pub fn pullback<T: Scalar>(
    points: &[AmbientPoint<T>],
    kind: MetricKind<T>,
) -> Result<SemimetricVector<T>> {
    if points.len() < 2 {
        return Err(Error::structural("pullback needs at least two points"));
    }
    let dim = points[0].dim();
    if points.iter().any(|p| p.dim() != dim) {
        return Err(Error::structural("points of mixed dimension"));
    }
    let n = points.len();
    let mut values = Vec::with_capacity(pair_count(n));
    for i in 0..n {
        for j in i + 1..n {
            values.push(rho_p(&points[i], &points[j], kind)?);
        }
    }
    Ok(SemimetricVector { n, values })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(coords: &[f64]) -> AmbientPoint<f64> {
        AmbientPoint::from_slice(coords)
    }

    #[test]
    fn pair_indexing_roundtrip() {
        let n = 6;
        let mut seen = vec![false; pair_count(n)];
        for i in 0..n {
            for j in i + 1..n {
                let idx = pair_index(n, i, j);
                assert!(!seen[idx]);
                seen[idx] = true;
            }
        }
        assert!(seen.iter().all(|&s| s));
        assert_eq!(point_count_for(15), Some(6));
        assert_eq!(point_count_for(7), None);
    }

    #[test]
    fn validates_equilateral_and_rejects_long_side() {
        let ok = SemimetricVector::new(vec![1.0, 1.0, 1.0]).unwrap();
        assert!(validate_semimetric(&ok).ok);

        let bad = SemimetricVector::new(vec![1.0, 1.0, 3.0]).unwrap();
        let report = validate_semimetric(&bad);
        assert!(!report.ok);
        assert_eq!(report.triangle_violations.len(), 1);
        let v = &report.triangle_violations[0];
        assert_eq!((v.i, v.j, v.k), (0, 1, 2));
    }

    #[test]
    fn collinear_distances_validate() {
        // points 0, 1, 3 on a line: r = (1, 3, 2)
        let r = SemimetricVector::new(vec![1.0, 3.0, 2.0]).unwrap();
        assert!(validate_semimetric(&r).ok);
    }

    #[test]
    fn malformed_length_is_structural() {
        assert!(SemimetricVector::<f64>::new(vec![1.0, 2.0]).is_err());
    }

    #[test]
    fn rho_p_examples() {
        let e = MetricKind::euclidean();
        assert_eq!(rho_p(&pt(&[0.0, 0.0]), &pt(&[3.0, 4.0]), e).unwrap(), 5.0);
        let x = pt(&[0.7, -1.3, 2.0]);
        let p3 = MetricKind::new(3.0).unwrap();
        assert_eq!(rho_p(&x, &x, p3).unwrap(), 0.0);
        let d = rho_p(&pt(&[0.0, 0.0]), &pt(&[1.0, 1.0]), p3).unwrap();
        assert!((d - 2f64.powf(1.0 / 3.0)).abs() < 1e-15);
    }

    #[test]
    fn rho_p_dimension_mismatch() {
        let e = MetricKind::euclidean();
        assert!(rho_p(&pt(&[0.0]), &pt(&[0.0, 1.0]), e).is_err());
    }

    #[test]
    fn metric_kind_requires_p_above_one() {
        assert!(MetricKind::new(1.0).is_err());
        assert!(MetricKind::new(0.5).is_err());
        assert!(MetricKind::new(2.5).is_ok());
    }

    #[test]
    fn pullback_examples() {
        let e = MetricKind::euclidean();
        let line = vec![pt(&[0.0]), pt(&[1.0]), pt(&[3.0])];
        let r = pullback(&line, e).unwrap();
        assert_eq!(r.values(), &[1.0, 3.0, 2.0]);

        let square = vec![
            pt(&[0.0, 0.0]),
            pt(&[1.0, 0.0]),
            pt(&[1.0, 1.0]),
            pt(&[0.0, 1.0]),
        ];
        let r = pullback(&square, e).unwrap();
        let s = 2f64.sqrt();
        let expect = [1.0, s, 1.0, 1.0, s, 1.0];
        for (a, b) in r.values().iter().zip(expect.iter()) {
            assert!((a - b).abs() < 1e-15);
        }
        assert!(validate_semimetric(&r).ok);

        // coincident points still validate
        let twin = vec![pt(&[1.0, 2.0]), pt(&[1.0, 2.0]), pt(&[0.0, 0.0])];
        let r = pullback(&twin, e).unwrap();
        assert_eq!(r.get(0, 1), 0.0);
        assert!(validate_semimetric(&r).ok);
    }
}
