//! Exact bivariate polynomials on `[0,1]²`, their tensor Bernstein forms, and
//! the two nonnegativity certificates used by the barrier argument.
//!
//! A polynomial with Bernstein form
//! `Σ p_ij C(m,i) tⁱ(1−t)^{m−i} C(n,j) vʲ(1−v)^{n−j}` is nonnegative on the
//! unit square as soon as every `p_ij ≥ 0`. The converse fails, so a failed
//! search is reported as [`Positivity::Inconclusive`].

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::{self, ratio, Rational};

fn binom(n: usize, k: usize) -> Rational {
    Rational::from_integer(binomial(BigInt::from(n), BigInt::from(k)))
}

/// Polynomial `Σ a_ij tⁱ vʲ` with stored degree bounds `(deg_a, deg_b)`.
#[derive(Debug, Clone)]
pub struct BiPoly {
    deg_a: usize,
    deg_b: usize,
    coeffs: Vec<Vec<Rational>>,
}

impl BiPoly {
    pub fn zero(deg_a: usize, deg_b: usize) -> Self {
        Self {
            deg_a,
            deg_b,
            coeffs: vec![vec![Rational::zero(); deg_b + 1]; deg_a + 1],
        }
    }

    pub fn constant(c: Rational) -> Self {
        Self {
            deg_a: 0,
            deg_b: 0,
            coeffs: vec![vec![c]],
        }
    }

    /// The coordinate `t`.
    pub fn t() -> Self {
        let mut p = Self::zero(1, 0);
        p.coeffs[1][0] = Rational::one();
        p
    }

    /// The coordinate `v`.
    pub fn v() -> Self {
        let mut p = Self::zero(0, 1);
        p.coeffs[0][1] = Rational::one();
        p
    }

    /// Builds from a rectangular matrix `coeffs[i][j]` of the monomial `tⁱvʲ`.
    pub fn from_coeffs(coeffs: Vec<Vec<Rational>>) -> Result<Self> {
        let rows = coeffs.len();
        let cols = coeffs.first().map_or(0, Vec::len);
        if rows == 0 || cols == 0 || coeffs.iter().any(|r| r.len() != cols) {
            return Err(Error::Domain(
                "coefficient matrix must be rectangular and nonempty".into(),
            ));
        }
        Ok(Self {
            deg_a: rows - 1,
            deg_b: cols - 1,
            coeffs,
        })
    }

    pub fn deg_a(&self) -> usize {
        self.deg_a
    }

    pub fn deg_b(&self) -> usize {
        self.deg_b
    }

    pub fn coeffs(&self) -> &[Vec<Rational>] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize, j: usize) -> Rational {
        self.coeffs
            .get(i)
            .and_then(|row| row.get(j))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Smallest degree bounds that hold every nonzero coefficient.
    pub fn natural_degree(&self) -> (usize, usize) {
        let mut da = 0;
        let mut db = 0;
        for (i, row) in self.coeffs.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                if !c.is_zero() {
                    da = da.max(i);
                    db = db.max(j);
                }
            }
        }
        (da, db)
    }

    /// Re-stores the polynomial with bounds `(deg_a, deg_b)`.
    pub fn with_bounds(&self, deg_a: usize, deg_b: usize) -> Result<Self> {
        let (na, nb) = self.natural_degree();
        if deg_a < na || deg_b < nb {
            return Err(Error::Degree {
                m: deg_a,
                n: deg_b,
                deg_a: na,
                deg_b: nb,
            });
        }
        let mut out = Self::zero(deg_a, deg_b);
        for i in 0..=deg_a {
            for j in 0..=deg_b {
                out.coeffs[i][j] = self.coeff(i, j);
            }
        }
        Ok(out)
    }

    /// Drops trailing zero rows and columns.
    pub fn tight(&self) -> Self {
        let (da, db) = self.natural_degree();
        self.with_bounds(da, db).expect("natural degree always fits")
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.deg_a.max(other.deg_a), self.deg_b.max(other.deg_b));
        for i in 0..=out.deg_a {
            for j in 0..=out.deg_b {
                out.coeffs[i][j] = self.coeff(i, j) + other.coeff(i, j);
            }
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self {
            deg_a: self.deg_a,
            deg_b: self.deg_b,
            coeffs: self
                .coeffs
                .iter()
                .map(|row| row.iter().map(|x| x * c).collect())
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.deg_a + other.deg_a, self.deg_b + other.deg_b);
        for (i, row) in self.coeffs.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                for (k, orow) in other.coeffs.iter().enumerate() {
                    for (l, y) in orow.iter().enumerate() {
                        out.coeffs[i + k][j + l] += x * y;
                    }
                }
            }
        }
        out
    }

    pub fn eval(&self, t: &Rational, v: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for row in self.coeffs.iter().rev() {
            let mut inner = Rational::zero();
            for c in row.iter().rev() {
                inner = inner * v + c;
            }
            acc = acc * t + inner;
        }
        acc
    }

    pub fn eval_f64(&self, t: f64, v: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, row| {
            acc * t + row.iter().rev().fold(0.0, |inner, c| inner * v + rational::to_f64(c))
        })
    }
}

impl PartialEq for BiPoly {
    fn eq(&self, other: &Self) -> bool {
        let da = self.deg_a.max(other.deg_a);
        let db = self.deg_b.max(other.deg_b);
        (0..=da).all(|i| (0..=db).all(|j| self.coeff(i, j) == other.coeff(i, j)))
    }
}

/// Tensor Bernstein coefficients `p_ij` of bidegree `(m, n)`.
#[derive(Debug, Clone, PartialEq)]
pub struct BernsteinForm {
    pub m: usize,
    pub n: usize,
    pub coeffs: Vec<Vec<Rational>>,
}

/// Serialized certificate: exact `num/den` strings, never floats.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CertificateJson {
    pub bidegree: [usize; 2],
    pub coeffs: Vec<Vec<String>>,
}

impl BernsteinForm {
    pub fn new(coeffs: Vec<Vec<Rational>>) -> Result<Self> {
        let p = BiPoly::from_coeffs(coeffs)?;
        Ok(Self {
            m: p.deg_a,
            n: p.deg_b,
            coeffs: p.coeffs,
        })
    }

    pub fn min_coeff(&self) -> Rational {
        self.coeffs.iter().flatten().min().cloned().expect("forms are nonempty")
    }

    pub fn is_nonnegative(&self) -> bool {
        !self.min_coeff().is_negative()
    }

    /// Raises the degree in `t` by one.
    pub fn elevate_t(&self) -> Self {
        let m1 = self.m + 1;
        let mut coeffs = vec![vec![Rational::zero(); self.n + 1]; m1 + 1];
        for i in 0..=m1 {
            let w = ratio(i as i64, m1 as i64);
            for j in 0..=self.n {
                let mut c = Rational::zero();
                if i > 0 {
                    c += &w * &self.coeffs[i - 1][j];
                }
                if i < m1 {
                    c += (Rational::one() - &w) * &self.coeffs[i][j];
                }
                coeffs[i][j] = c;
            }
        }
        Self {
            m: m1,
            n: self.n,
            coeffs,
        }
    }

    /// Raises the degree in `v` by one.
    pub fn elevate_v(&self) -> Self {
        self.transposed().elevate_t().transposed()
    }

    pub fn elevate(&self, dm: usize, dn: usize) -> Self {
        let mut out = self.clone();
        for _ in 0..dm {
            out = out.elevate_t();
        }
        for _ in 0..dn {
            out = out.elevate_v();
        }
        out
    }

    fn transposed(&self) -> Self {
        let coeffs = (0..=self.n)
            .map(|j| (0..=self.m).map(|i| self.coeffs[i][j].clone()).collect())
            .collect();
        Self {
            m: self.n,
            n: self.m,
            coeffs,
        }
    }

    /// Exact evaluation of the Bernstein sum.
    pub fn eval(&self, t: &Rational, v: &Rational) -> Rational {
        let one = Rational::one();
        let basis = |deg: usize, x: &Rational| -> Vec<Rational> {
            (0..=deg)
                .map(|i| binom(deg, i) * pow(x, i) * pow(&(&one - x), deg - i))
                .collect()
        };
        let bt = basis(self.m, t);
        let bv = basis(self.n, v);
        let mut acc = Rational::zero();
        for (i, row) in self.coeffs.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                acc += c * &bt[i] * &bv[j];
            }
        }
        acc
    }

    pub fn to_json(&self) -> CertificateJson {
        CertificateJson {
            bidegree: [self.m, self.n],
            coeffs: self
                .coeffs
                .iter()
                .map(|row| row.iter().map(rational::to_fraction_string).collect())
                .collect(),
        }
    }
}

fn pow(x: &Rational, k: usize) -> Rational {
    (0..k).fold(Rational::one(), |acc, _| acc * x)
}

/// Bernstein coefficients at bidegree `(m, n)` through
/// `p_ij = Σ_{k≤i, l≤j} C(i,k)C(j,l)/(C(m,k)C(n,l)) a_kl`.
pub fn to_bernstein(poly: &BiPoly, m: usize, n: usize) -> Result<BernsteinForm> {
    if m < poly.deg_a || n < poly.deg_b {
        return Err(Error::Degree {
            m,
            n,
            deg_a: poly.deg_a,
            deg_b: poly.deg_b,
        });
    }
    let wt: Vec<Vec<Rational>> = (0..=m)
        .map(|i| (0..=i).map(|k| binom(i, k) / binom(m, k)).collect())
        .collect();
    let wv: Vec<Vec<Rational>> = (0..=n)
        .map(|j| (0..=j).map(|l| binom(j, l) / binom(n, l)).collect())
        .collect();
    let mut coeffs = vec![vec![Rational::zero(); n + 1]; m + 1];
    for i in 0..=m {
        for j in 0..=n {
            let mut acc = Rational::zero();
            for k in 0..=i.min(poly.deg_a) {
                for l in 0..=j.min(poly.deg_b) {
                    let a = &poly.coeffs[k][l];
                    if !a.is_zero() {
                        acc += &wt[i][k] * &wv[j][l] * a;
                    }
                }
            }
            coeffs[i][j] = acc;
        }
    }
    Ok(BernsteinForm { m, n, coeffs })
}

/// Monomial coefficients of `C(deg,i) xⁱ(1−x)^{deg−i}`.
fn basis_monomials(deg: usize, i: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); deg + 1];
    let lead = binom(deg, i);
    for k in 0..=deg - i {
        let sign = if k % 2 == 0 { Rational::one() } else { -Rational::one() };
        out[i + k] = &lead * binom(deg - i, k) * sign;
    }
    out
}

/// Expands a Bernstein form back into the monomial basis with bounds `(m, n)`.
pub fn from_bernstein(form: &BernsteinForm) -> BiPoly {
    let bt: Vec<_> = (0..=form.m).map(|i| basis_monomials(form.m, i)).collect();
    let bv: Vec<_> = (0..=form.n).map(|j| basis_monomials(form.n, j)).collect();
    let mut out = BiPoly::zero(form.m, form.n);
    for (i, row) in form.coeffs.iter().enumerate() {
        for (j, p) in row.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            for (k, x) in bt[i].iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                for (l, y) in bv[j].iter().enumerate() {
                    if !y.is_zero() {
                        out.coeffs[k][l] += p * x * y;
                    }
                }
            }
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq)]
pub enum Positivity {
    /// All Bernstein coefficients at this bidegree are nonnegative.
    Certificate(BernsteinForm),
    /// No bidegree within the search bound works; this does not show that
    /// the polynomial takes a negative value.
    Inconclusive { best_min: Rational, m: usize, n: usize },
}

/// Searches bidegrees `(deg_a + i, deg_b + j)` with `i, j ≤ max_elevation`,
/// in order of increasing `i + j`, for a nonnegative Bernstein form.
pub fn certify_nonneg(poly: &BiPoly, max_elevation: usize) -> Positivity {
    let mut best: Option<(Rational, usize, usize)> = None;
    for total in 0..=2 * max_elevation {
        for i in total.saturating_sub(max_elevation)..=total.min(max_elevation) {
            let (m, n) = (poly.deg_a + i, poly.deg_b + total - i);
            let form = to_bernstein(poly, m, n).expect("bidegree at or above the stored bounds");
            let min = form.min_coeff();
            if !min.is_negative() {
                return Positivity::Certificate(form);
            }
            if best.as_ref().is_none_or(|(b, _, _)| &min > b) {
                best = Some((min, m, n));
            }
        }
    }
    let (best_min, m, n) = best.expect("search visits at least one bidegree");
    Positivity::Inconclusive { best_min, m, n }
}

/// `A = 1 − t` and `B = 1 − v` as polynomials.
fn shifted_ab() -> (BiPoly, BiPoly) {
    let one = BiPoly::constant(Rational::one());
    (one.sub(&BiPoly::t()), one.sub(&BiPoly::v()))
}

fn c_poly(a: &BiPoly, b: &BiPoly) -> BiPoly {
    BiPoly::constant(rational::int(2)).add(&a.mul(b)).sub(&a.mul(a))
}

/// `Y(1−t, 1−v)` where `Y(A,B) = (2+AB−A²)(2+AB−B²) − 2(A+B)`.
pub fn y_polynomial() -> BiPoly {
    let (a, b) = shifted_ab();
    let two = rational::int(2);
    let left = c_poly(&a, &b);
    let right = BiPoly::constant(two.clone()).add(&a.mul(&b)).sub(&b.mul(&b));
    left.mul(&right)
        .sub(&a.add(&b).scale(&two))
        .with_bounds(3, 3)
        .expect("Y has bidegree (3, 3)")
}

/// `2Z(1−t, 1−v)` where `Z = C[2(C−A−B) + (A+B)(1−AB)/2] − (5/2)(1−A²)(1+AB)`,
/// stored with bounds `(4, 4)`.
pub fn z2_polynomial() -> BiPoly {
    let (a, b) = shifted_ab();
    let one = BiPoly::constant(Rational::one());
    let c = c_poly(&a, &b);
    let a_plus_b = a.add(&b);
    let bracket = c
        .sub(&a_plus_b)
        .scale(&rational::int(2))
        .add(&a_plus_b.mul(&one.sub(&a.mul(&b))).scale(&ratio(1, 2)));
    let z = c
        .mul(&bracket)
        .sub(&one.sub(&a.mul(&a)).mul(&one.add(&a.mul(&b))).scale(&ratio(5, 2)));
    z.scale(&rational::int(2))
        .with_bounds(4, 4)
        .expect("2Z fits bidegree (4, 4)")
}

fn parse_matrix(rows: &[&[&str]]) -> Vec<Vec<Rational>> {
    rows.iter()
        .map(|row| row.iter().map(|s| rational::parse(s).expect("valid literal")).collect())
        .collect()
}

/// Published Bernstein coefficients of `Y(1−t, 1−v)` at bidegree `(3, 3)`.
pub fn published_y() -> BernsteinForm {
    BernsteinForm::new(parse_matrix(&[
        &["0", "2/3", "1/3", "0"],
        &["2/3", "2", "20/9", "2"],
        &["1/3", "20/9", "28/9", "10/3"],
        &["0", "2", "10/3", "4"],
    ]))
    .expect("rectangular")
}

/// Published Bernstein coefficients of `2Z(1−t, 1−v)` at bidegree `(4, 4)`.
pub fn published_z2() -> BernsteinForm {
    BernsteinForm::new(parse_matrix(&[
        &["0", "1", "4/3", "5/4", "1"],
        &["0", "9/8", "41/24", "15/8", "7/4"],
        &["10/3", "55/12", "49/9", "143/24", "37/6"],
        &["5", "103/16", "23/3", "139/16", "19/2"],
        &["5", "13/2", "8", "19/2", "11"],
    ]))
    .expect("rectangular")
}

#[derive(Debug, Clone, PartialEq)]
pub struct AppendixReport {
    pub y: BernsteinForm,
    pub z2: BernsteinForm,
    pub y_nonnegative: bool,
    pub z2_nonnegative: bool,
}

impl AppendixReport {
    pub fn passed(&self) -> bool {
        self.y_nonnegative && self.z2_nonnegative
    }
}

fn compare(name: &str, expected: &BernsteinForm, computed: &BernsteinForm) -> Result<()> {
    if (expected.m, expected.n) != (computed.m, computed.n) {
        return Err(Error::CertificateMismatch {
            matrix: name.into(),
            i: expected.m.min(computed.m) + 1,
            j: expected.n.min(computed.n) + 1,
            expected: format!("bidegree ({}, {})", expected.m, expected.n),
            computed: format!("bidegree ({}, {})", computed.m, computed.n),
        });
    }
    for (i, (er, cr)) in expected.coeffs.iter().zip(&computed.coeffs).enumerate() {
        for (j, (e, c)) in er.iter().zip(cr).enumerate() {
            if e != c {
                return Err(Error::CertificateMismatch {
                    matrix: name.into(),
                    i,
                    j,
                    expected: rational::to_fraction_string(e),
                    computed: rational::to_fraction_string(c),
                });
            }
        }
    }
    Ok(())
}

/// Rebuilds both certificates from their closed forms and compares them
/// entry by entry with `y_ref` and `z2_ref`.
pub fn verify_appendix_certificates_against(y_ref: &BernsteinForm, z2_ref: &BernsteinForm) -> Result<AppendixReport> {
    let y = to_bernstein(&y_polynomial(), 3, 3)?;
    let z2 = to_bernstein(&z2_polynomial(), 4, 4)?;
    compare("y", y_ref, &y)?;
    compare("z", z2_ref, &z2)?;
    Ok(AppendixReport {
        y_nonnegative: y.is_nonnegative(),
        z2_nonnegative: z2.is_nonnegative(),
        y,
        z2,
    })
}

pub fn verify_appendix_certificates() -> Result<AppendixReport> {
    verify_appendix_certificates_against(&published_y(), &published_z2())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;
    use proptest::prelude::*;

    #[test]
    fn partition_of_unity() {
        let one = BiPoly::constant(int(1));
        let f = to_bernstein(&one, 3, 2).unwrap();
        assert!(f.coeffs.iter().flatten().all(|c| *c == int(1)));
        let f = BernsteinForm::new(vec![vec![ratio(3, 7); 3]; 4]).unwrap();
        assert_eq!(from_bernstein(&f), BiPoly::constant(ratio(3, 7)));
    }

    #[test]
    fn endpoint_interpolation_of_t() {
        let f = to_bernstein(&BiPoly::t(), 1, 0).unwrap();
        assert_eq!(f.coeffs, vec![vec![int(0)], vec![int(1)]]);
        assert!(matches!(to_bernstein(&BiPoly::t(), 0, 0), Err(Error::Degree { .. })));
    }

    #[test]
    fn y_certificate_matches_published_matrix() {
        let f = to_bernstein(&y_polynomial(), 3, 3).unwrap();
        assert_eq!(f, published_y());
        assert_eq!(from_bernstein(&published_y()), y_polynomial());
        assert_eq!(y_polynomial().eval(&int(0), &int(0)), int(0));
        assert_eq!(y_polynomial().eval(&int(1), &int(1)), int(4));
    }

    #[test]
    fn z_certificate_matches_published_matrix() {
        let f = to_bernstein(&z2_polynomial(), 4, 4).unwrap();
        assert_eq!(f, published_z2());
        assert_eq!(f.coeffs[4][4], int(11));
        assert_eq!(from_bernstein(&published_z2()), z2_polynomial());
        assert_eq!(z2_polynomial().natural_degree(), (4, 3));
    }

    #[test]
    fn y_and_z_agree_with_float_closed_forms() {
        for &(t, v) in &[(0.1, 0.7), (0.5, 0.5), (0.9, 0.2)] {
            let (a, b) = (1.0 - t, 1.0 - v);
            let y = crate::scalar::y_value(a, b);
            let z = crate::scalar::z_value(a, b);
            assert!((y_polynomial().eval_f64(t, v) - y).abs() < 1e-13);
            assert!((z2_polynomial().eval_f64(t, v) - 2.0 * z).abs() < 1e-13);
        }
    }

    #[test]
    fn certificate_report() {
        let r = verify_appendix_certificates().unwrap();
        assert!(r.passed());
        assert_eq!(r.y.coeffs[1][2], ratio(20, 9));
        assert_eq!(r.z2.coeffs[2][2], ratio(49, 9));
        let mut bad = published_y();
        bad.coeffs[0][0] = int(1);
        match verify_appendix_certificates_against(&bad, &published_z2()) {
            Err(Error::CertificateMismatch { matrix, i, j, .. }) => assert_eq!((matrix.as_str(), i, j), ("y", 0, 0)),
            other => panic!("expected mismatch, got {other:?}"),
        }
    }

    #[test]
    fn certificate_search() {
        assert!(matches!(certify_nonneg(&y_polynomial(), 0), Positivity::Certificate(f) if (f.m, f.n) == (3, 3)));
        match certify_nonneg(&z2_polynomial(), 2) {
            Positivity::Certificate(f) => assert_eq!((f.m, f.n, f.coeffs[4][4].clone()), (4, 4, int(11))),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn square_with_double_root_stays_inconclusive() {
        // (t − 1/2)² has a negative middle Bernstein coefficient at every degree
        let half = BiPoly::t().sub(&BiPoly::constant(ratio(1, 2)));
        let sq = half.mul(&half);
        let f = to_bernstein(&sq, 2, 0).unwrap();
        assert_eq!(f.coeffs, vec![vec![ratio(1, 4)], vec![ratio(-1, 4)], vec![ratio(1, 4)]]);
        assert!(matches!(certify_nonneg(&sq, 12), Positivity::Inconclusive { .. }));

        let lifted = sq.add(&BiPoly::constant(ratio(1, 16)));
        match certify_nonneg(&lifted, 6) {
            Positivity::Certificate(f) => {
                assert!(f.m > 2 && f.is_nonnegative());
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn json_uses_exact_strings() {
        let j = published_y().to_json();
        assert_eq!(j.bidegree, [3, 3]);
        assert_eq!(j.coeffs[0][0], "0/1");
        assert_eq!(j.coeffs[1][2], "20/9");
    }

    fn small_rational() -> impl Strategy<Value = Rational> {
        (-20i64..=20, 1i64..=9).prop_map(|(n, d)| ratio(n, d))
    }

    fn random_poly() -> impl Strategy<Value = BiPoly> {
        (0usize..=6, 0usize..=6).prop_flat_map(|(da, db)| {
            proptest::collection::vec(proptest::collection::vec(small_rational(), db + 1), da + 1)
                .prop_map(|c| BiPoly::from_coeffs(c).unwrap())
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]

        #[test]
        fn round_trip_is_exact(p in random_poly(), em in 0usize..3, en in 0usize..3) {
            let f = to_bernstein(&p, p.deg_a() + em, p.deg_b() + en).unwrap();
            prop_assert_eq!(from_bernstein(&f), p.clone());
            let (zero, one) = (int(0), int(1));
            prop_assert_eq!(&f.coeffs[0][0], &p.eval(&zero, &zero));
            prop_assert_eq!(&f.coeffs[f.m][0], &p.eval(&one, &zero));
            prop_assert_eq!(&f.coeffs[0][f.n], &p.eval(&zero, &one));
            prop_assert_eq!(&f.coeffs[f.m][f.n], &p.eval(&one, &one));
        }

        #[test]
        fn elevation_preserves_polynomial(p in random_poly(), dm in 0usize..3, dn in 0usize..3) {
            let f = to_bernstein(&p, p.deg_a(), p.deg_b()).unwrap();
            let g = f.elevate(dm, dn);
            prop_assert_eq!(&g, &to_bernstein(&p, p.deg_a() + dm, p.deg_b() + dn).unwrap());
            prop_assert!(g.min_coeff() >= f.min_coeff());
            let (t, v) = (ratio(1, 3), ratio(5, 7));
            prop_assert_eq!(g.eval(&t, &v), p.eval(&t, &v));
        }

        #[test]
        fn certificates_are_sound(p in random_poly(), shift in 0i64..40) {
            let p = p.add(&BiPoly::constant(int(shift)));
            if let Positivity::Certificate(_) = certify_nonneg(&p, 2) {
                for k in 0..100 {
                    let t = (k as f64 * 0.618_033_988_75).fract();
                    let v = (k as f64 * 0.754_877_666_25).fract();
                    prop_assert!(p.eval_f64(t, v) >= -1e-12);
                }
            }
        }
    }
}
