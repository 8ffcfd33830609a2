//! Laurent polynomials with exact integer coefficients.
//!
//! [`LaurentPoly`] is univariate, [`BiLaurent`] carries two named variables,
//! either (w, z) or (p, q) in practice. No zero coefficient is ever stored,
//! so structural equality is polynomial equality.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Univariate Laurent polynomial, exponent → coefficient.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    pub fn monomial(coeff: impl Into<BigInt>, exp: i64) -> Self {
        let mut p = Self::default();
        p.add_term(exp, coeff.into());
        p
    }

    pub fn add_term(&mut self, exp: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    /// Multiplication by z^k.
    pub fn shifted(&self, k: i64) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect() }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Writes `self` as Σ λ_n·base^n with integer λ_n and n ≥ 0, by repeated
    /// subtraction of the leading term. Requires the top coefficient of
    /// `base` to be 1 and its top exponent positive. Returns None when no
    /// such expansion exists.
    pub fn expand_in_powers(&self, base: &LaurentPoly) -> Option<Vec<(i64, BigInt)>> {
        let base_top = base.max_exp()?;
        if base_top <= 0 || !base.coeff(base_top).is_one() {
            return None;
        }
        let mut rest = self.clone();
        let mut out = Vec::new();
        while let Some(top) = rest.max_exp() {
            if top < 0 || top % base_top != 0 {
                return None;
            }
            let n = top / base_top;
            let lambda = rest.coeff(top);
            rest = &rest - &base.pow(n as u32).scaled(&lambda);
            out.push((n, lambda));
        }
        out.reverse();
        Some(out)
    }

    pub fn scaled(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly { terms: self.terms.iter().map(|(e, k)| (*e, k * c)).collect() }
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in rhs.terms.iter() {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in rhs.terms.iter() {
            out.add_term(*e, -c);
        }
        out
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in self.terms.iter() {
            for (e2, c2) in rhs.terms.iter() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(i64, &BigInt)> = self.terms.iter().rev().map(|(e, c)| (*e, c)).collect();
        write_terms(f, terms.into_iter().map(|(e, c)| (c.clone(), format_vars(&[("z", e)]))))
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Laurent polynomial in two named variables.
#[derive(Clone, PartialEq, Eq)]
pub struct BiLaurent {
    vars: [&'static str; 2],
    terms: BTreeMap<(i64, i64), BigInt>,
}

impl BiLaurent {
    pub fn zero(vars: [&'static str; 2]) -> Self {
        BiLaurent { vars, terms: BTreeMap::new() }
    }

    pub fn one(vars: [&'static str; 2]) -> Self {
        Self::monomial(vars, 1, (0, 0))
    }

    pub fn monomial(vars: [&'static str; 2], coeff: impl Into<BigInt>, exps: (i64, i64)) -> Self {
        let mut p = Self::zero(vars);
        p.add_term(exps, coeff.into());
        p
    }

    pub fn vars(&self) -> [&'static str; 2] {
        self.vars
    }

    pub fn add_term(&mut self, exps: (i64, i64), coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exps).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&exps);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exps: (i64, i64)) -> BigInt {
        self.terms.get(&exps).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = ((i64, i64), &BigInt)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    /// Terms ordered for printing: descending total degree, then
    /// lexicographically by exponents, first variable before second.
    pub fn display_order(&self) -> Vec<((i64, i64), BigInt)> {
        let mut terms: Vec<((i64, i64), BigInt)> =
            self.terms.iter().map(|(e, c)| (*e, c.clone())).collect();
        terms.sort_by_key(|((e0, e1), _)| (-(e0 + e1), -e0, -e1));
        terms
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(self.vars);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Multiplication by coeff·v0^e0·v1^e1.
    pub fn mul_monomial(&self, coeff: &BigInt, exps: (i64, i64)) -> Self {
        let mut out = Self::zero(self.vars);
        for ((e0, e1), c) in self.terms.iter() {
            out.add_term((e0 + exps.0, e1 + exps.1), c * coeff);
        }
        out
    }

    /// Sets the given variable to 1, collapsing onto the other one.
    pub fn specialize_one(&self, which: usize) -> LaurentPoly {
        assert!(which < 2);
        let mut out = LaurentPoly::zero();
        for ((e0, e1), c) in self.terms.iter() {
            out.add_term(if which == 0 { *e1 } else { *e0 }, c.clone());
        }
        out
    }

    /// Decomposes along the first variable: exponent of v0 → coefficient,
    /// a Laurent polynomial in v1.
    pub fn by_first_var(&self) -> BTreeMap<i64, LaurentPoly> {
        let mut out: BTreeMap<i64, LaurentPoly> = BTreeMap::new();
        for ((e0, e1), c) in self.terms.iter() {
            out.entry(*e0).or_insert_with(LaurentPoly::zero).add_term(*e1, c.clone());
        }
        out
    }

    /// Embeds a univariate polynomial as `which`-variable powers.
    pub fn from_univar(vars: [&'static str; 2], which: usize, p: &LaurentPoly) -> Self {
        assert!(which < 2);
        let mut out = Self::zero(vars);
        for (e, c) in p.iter() {
            out.add_term(if which == 0 { (e, 0) } else { (0, e) }, c.clone());
        }
        out
    }

    /// Substitutes both variables simultaneously. `images[i]` supplies the
    /// replacement for v_i and for v_i⁻¹; a needed image that is absent is
    /// an error (that substitution would require inverting a polynomial).
    pub fn substitute(
        &self,
        images: [&VarImage; 2],
        out_vars: [&'static str; 2],
    ) -> Result<BiLaurent, SubstituteError> {
        let mut out = BiLaurent::zero(out_vars);
        for ((e0, e1), c) in self.terms.iter() {
            let f0 = images[0].power(self.vars[0], *e0, out_vars)?;
            let f1 = images[1].power(self.vars[1], *e1, out_vars)?;
            out = &out + &(&f0 * &f1).mul_monomial(c, (0, 0));
        }
        Ok(out)
    }
}

impl Add<&BiLaurent> for &BiLaurent {
    type Output = BiLaurent;
    fn add(self, rhs: &BiLaurent) -> BiLaurent {
        assert_eq!(self.vars, rhs.vars, "variable mismatch");
        let mut out = self.clone();
        for (e, c) in rhs.terms.iter() {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub<&BiLaurent> for &BiLaurent {
    type Output = BiLaurent;
    fn sub(self, rhs: &BiLaurent) -> BiLaurent {
        assert_eq!(self.vars, rhs.vars, "variable mismatch");
        let mut out = self.clone();
        for (e, c) in rhs.terms.iter() {
            out.add_term(*e, -c);
        }
        out
    }
}

impl Mul<&BiLaurent> for &BiLaurent {
    type Output = BiLaurent;
    fn mul(self, rhs: &BiLaurent) -> BiLaurent {
        assert_eq!(self.vars, rhs.vars, "variable mismatch");
        let mut out = BiLaurent::zero(self.vars);
        for ((a0, a1), c1) in self.terms.iter() {
            for ((b0, b1), c2) in rhs.terms.iter() {
                out.add_term((a0 + b0, a1 + b1), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &BiLaurent {
    type Output = BiLaurent;
    fn neg(self) -> BiLaurent {
        BiLaurent { vars: self.vars, terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }
}

impl fmt::Display for BiLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [v0, v1] = self.vars;
        write_terms(
            f,
            self.display_order()
                .into_iter()
                .map(|((e0, e1), c)| (c, format_vars(&[(v0, e0), (v1, e1)]))),
        )
    }
}

impl fmt::Debug for BiLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Replacement rule for one variable in [`BiLaurent::substitute`].
#[derive(Clone, Default)]
pub struct VarImage {
    /// Image of the variable itself.
    pub direct: Option<BiLaurent>,
    /// Image of the variable's inverse.
    pub inverse: Option<BiLaurent>,
}

impl VarImage {
    pub fn direct(p: BiLaurent) -> Self {
        VarImage { direct: Some(p), inverse: None }
    }

    pub fn inverse(p: BiLaurent) -> Self {
        VarImage { direct: None, inverse: Some(p) }
    }

    pub fn both(direct: BiLaurent, inverse: BiLaurent) -> Self {
        VarImage { direct: Some(direct), inverse: Some(inverse) }
    }

    fn power(
        &self,
        var: &'static str,
        exp: i64,
        out_vars: [&'static str; 2],
    ) -> Result<BiLaurent, SubstituteError> {
        if exp == 0 {
            return Ok(BiLaurent::one(out_vars));
        }
        let (base, inverse) = if exp > 0 { (&self.direct, false) } else { (&self.inverse, true) };
        let base = base.as_ref().ok_or(SubstituteError { var, inverse })?;
        Ok(base.pow(exp.unsigned_abs() as u32))
    }
}

/// A substitution needed the image of `var` (or of its inverse) but none was
/// supplied; performing it would require a true polynomial inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubstituteError {
    pub var: &'static str,
    pub inverse: bool,
}

impl fmt::Display for SubstituteError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = self.var;
        if self.inverse {
            write!(f, "substitution requires an image for {v}^-1, which has none")
        } else {
            write!(f, "substitution requires an image for {v}, which has none")
        }
    }
}

impl core::error::Error for SubstituteError {}

fn format_vars(vars: &[(&str, i64)]) -> String {
    use core::fmt::Write;
    let mut s = String::new();
    for (name, exp) in vars {
        match exp {
            0 => {}
            1 => {
                if !s.is_empty() {
                    s.push('*');
                }
                s.push_str(name);
            }
            e => {
                if !s.is_empty() {
                    s.push('*');
                }
                let _ = write!(s, "{name}^{e}");
            }
        }
    }
    s
}

fn write_terms(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (BigInt, String)>,
) -> fmt::Result {
    let mut first = true;
    for (coeff, vars) in terms {
        let mag = coeff.abs();
        if first {
            if coeff.is_negative() {
                write!(f, "-")?;
            }
            first = false;
        } else if coeff.is_negative() {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        if vars.is_empty() {
            write!(f, "{mag}")?;
        } else if mag.is_one() {
            write!(f, "{vars}")?;
        } else {
            write!(f, "{mag}*{vars}")?;
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t_poly() -> BiLaurent {
        // q⁻¹ + 1 + q in (p, q)
        let mut t = BiLaurent::zero(["p", "q"]);
        t.add_term((0, -1), 1.into());
        t.add_term((0, 0), 1.into());
        t.add_term((0, 1), 1.into());
        t
    }

    #[test]
    fn t_square_expansion() {
        // (q⁻¹+1+q)² = q⁻²+2q⁻¹+3+2q+q²
        let sq = t_poly().pow(2);
        let expected: &[((i64, i64), i64)] =
            &[((0, -2), 1), ((0, -1), 2), ((0, 0), 3), ((0, 1), 2), ((0, 2), 1)];
        for &(e, c) in expected {
            assert_eq!(sq.coeff(e), c.into());
        }
        assert_eq!(sq.iter().count(), expected.len());
    }

    #[test]
    fn substitute_z_inverse_and_w() {
        // ẽ = z⁻² in (w,z), substituted with z⁻¹ ↦ q⁻¹+1+q, becomes t².
        let e_tilde = BiLaurent::monomial(["w", "z"], 1, (0, -2));
        let w_img = VarImage::direct({
            let mut p = BiLaurent::zero(["p", "q"]);
            p.add_term((0, 2), (-1).into());
            p.add_term((1, 2), (-1).into());
            p
        });
        let z_img = VarImage::inverse(t_poly());
        let got = e_tilde.substitute([&w_img, &z_img], ["p", "q"]).unwrap();
        assert_eq!(got, t_poly().pow(2));

        // A positive power of z has no image and must error.
        let bad = BiLaurent::monomial(["w", "z"], 1, (0, 1));
        let err = bad.substitute([&w_img, &z_img], ["p", "q"]).unwrap_err();
        assert_eq!(err, SubstituteError { var: "z", inverse: false });
    }

    #[test]
    fn substitute_constant_is_identity() {
        let one = BiLaurent::one(["w", "z"]);
        let got = one.substitute([&VarImage::default(), &VarImage::default()], ["p", "q"]);
        assert_eq!(got.unwrap(), BiLaurent::one(["p", "q"]));
    }

    #[test]
    fn expand_in_symmetric_powers() {
        let t = t_poly().specialize_one(0); // univariate in q
        let g = &(&t.pow(3)).scaled(&2.into()) - &t.pow(1);
        let expansion = g.expand_in_powers(&t).unwrap();
        assert_eq!(expansion, alloc::vec![(1, (-1).into()), (3, 2.into())]);

        // q alone is not a combination of powers of t
        let q = LaurentPoly::monomial(1, 1);
        assert!(q.expand_in_powers(&t).is_none());
    }

    #[test]
    fn display_golden() {
        let mut p = LaurentPoly::zero();
        p.add_term(2, 2.into());
        p.add_term(1, 2.into());
        assert_eq!(alloc::format!("{p}"), "2*z^2 + 2*z");

        let mut g = BiLaurent::zero(["w", "z"]);
        g.add_term((0, 2), 1.into());
        g.add_term((1, 1), 2.into());
        g.add_term((2, 2), 1.into());
        assert_eq!(alloc::format!("{g}"), "w^2*z^2 + 2*w*z + z^2");

        assert_eq!(alloc::format!("{}", LaurentPoly::zero()), "0");
        let mut n = LaurentPoly::zero();
        n.add_term(-2, 1.into());
        n.add_term(0, (-3).into());
        assert_eq!(alloc::format!("{n}"), "-3 + z^-2");
    }

    #[test]
    fn specialize_and_slices() {
        let mut g = BiLaurent::zero(["w", "z"]);
        g.add_term((0, 2), 1.into());
        g.add_term((1, 1), 2.into());
        g.add_term((2, 2), 1.into());
        let at_one = g.specialize_one(0);
        assert_eq!(at_one.coeff(2), 2.into());
        assert_eq!(at_one.coeff(1), 2.into());
        let slices = g.by_first_var();
        assert_eq!(slices.len(), 3);
        assert_eq!(slices[&1].coeff(1), 2.into());
    }
}
