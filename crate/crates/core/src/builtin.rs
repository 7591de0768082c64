//! The complex numbers, the quaternion algebras `E(a, b)` and the octonions,
//! with conjugation, norm, inverse and rotation.

use crate::algebra::{AlgElement, AlgebraKind, FreeAlgebra};
use crate::error::{Error, Result};
use crate::rational::Rational;

/// Parameters of the quaternion algebra with `i^2 = a`, `j^2 = b`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuaternionParams {
    a: Rational,
    b: Rational,
}

impl QuaternionParams {
    pub fn new(a: Rational, b: Rational) -> Result<Self> {
        if a.is_zero() || b.is_zero() {
            return Err(Error::DegenerateParams);
        }
        Ok(QuaternionParams { a, b })
    }

    /// `a = b = -1`.
    pub fn hamilton() -> Self {
        QuaternionParams { a: Rational::from(-1), b: Rational::from(-1) }
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }
}

fn labels(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

fn unit_rows(n: usize) -> Vec<(usize, usize, usize, Rational)> {
    let mut out = vec![(0, 0, 0, Rational::one())];
    for i in 1..n {
        out.push((0, i, i, Rational::one()));
        out.push((i, 0, i, Rational::one()));
    }
    out
}

pub fn complex_algebra() -> FreeAlgebra {
    let mut c = unit_rows(2);
    c.push((1, 1, 0, Rational::from(-1)));
    FreeAlgebra::with_kind(2, labels(&["1", "i"]), c, Some(0), AlgebraKind::Complex)
        .expect("complex table is valid")
}

pub fn quaternion_algebra(p: &QuaternionParams) -> FreeAlgebra {
    let (a, b) = (p.a.clone(), p.b.clone());
    let mut c = unit_rows(4);
    c.extend([
        (1, 1, 0, a.clone()),
        (2, 2, 0, b.clone()),
        (3, 3, 0, -(&a * &b)),
        (1, 2, 3, Rational::one()),
        (2, 1, 3, Rational::from(-1)),
        (1, 3, 2, a.clone()),
        (3, 1, 2, -&a),
        (2, 3, 1, -&b),
        (3, 2, 1, b),
    ]);
    FreeAlgebra::with_kind(4, labels(&["1", "i", "j", "k"]), c, Some(0), AlgebraKind::Quaternion(p.clone()))
        .expect("quaternion table is valid")
}

/// Hamilton's quaternions, `E(-1, -1)`.
pub fn hamilton() -> FreeAlgebra {
    quaternion_algebra(&QuaternionParams::hamilton())
}

/// `OCTONION_TABLE[i][j] = (sign, k)` meaning `e_i e_j = sign * e_k`.
const OCTONION_TABLE: [[(i8, u8); 8]; 8] = [
    [(1, 0), (1, 1), (1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (1, 7)],
    [(1, 1), (-1, 0), (1, 3), (-1, 2), (1, 5), (-1, 4), (-1, 7), (1, 6)],
    [(1, 2), (-1, 3), (-1, 0), (1, 1), (1, 6), (1, 7), (-1, 4), (-1, 5)],
    [(1, 3), (1, 2), (-1, 1), (-1, 0), (1, 7), (-1, 6), (1, 5), (-1, 4)],
    [(1, 4), (-1, 5), (-1, 6), (-1, 7), (-1, 0), (1, 1), (1, 2), (1, 3)],
    [(1, 5), (1, 4), (-1, 7), (1, 6), (-1, 1), (-1, 0), (-1, 3), (1, 2)],
    [(1, 6), (1, 7), (1, 4), (-1, 5), (-1, 2), (1, 3), (-1, 0), (-1, 1)],
    [(1, 7), (-1, 6), (1, 5), (1, 4), (-1, 3), (-1, 2), (1, 1), (-1, 0)],
];

pub fn octonion_algebra() -> FreeAlgebra {
    let mut c = Vec::with_capacity(64);
    for (i, row) in OCTONION_TABLE.iter().enumerate() {
        for (j, &(s, k)) in row.iter().enumerate() {
            c.push((i, j, k as usize, Rational::from(s as i64)));
        }
    }
    let names = ["1", "e1", "e2", "e3", "e4", "e5", "e6", "e7"];
    FreeAlgebra::with_kind(8, labels(&names), c, Some(0), AlgebraKind::Octonion).expect("octonion table is valid")
}

fn is_builtin(alg: &FreeAlgebra) -> bool {
    matches!(alg.kind(), AlgebraKind::Complex | AlgebraKind::Quaternion(_) | AlgebraKind::Octonion)
}

/// Negates every coordinate except the scalar one.
pub fn conjugate(x: &AlgElement) -> Result<AlgElement> {
    if !is_builtin(x.algebra()) {
        return Err(Error::UnsupportedAlgebra);
    }
    let coords = x.coords().iter().enumerate().map(|(i, c)| if i == 0 { c.clone() } else { -c }).collect();
    AlgElement::new(x.algebra(), coords)
}

/// `x conj(x)` read off at the scalar coordinate. For `E(a, b)` this is
/// `x0^2 - a x1^2 - b x2^2 + ab x3^2`.
pub fn norm_sq(x: &AlgElement) -> Result<Rational> {
    let c = x.coords();
    match x.algebra().kind() {
        AlgebraKind::Complex => Ok(c[0].square() + c[1].square()),
        AlgebraKind::Quaternion(p) => {
            Ok(c[0].square() - &p.a * c[1].square() - &p.b * c[2].square() + &p.a * &p.b * c[3].square())
        }
        AlgebraKind::Octonion => Ok(x.multiply(&conjugate(x)?)?.coord(0).clone()),
        _ => Err(Error::UnsupportedAlgebra),
    }
}

/// `x^{-1} = conj(x) / |x|^2`.
pub fn inverse_element(x: &AlgElement) -> Result<AlgElement> {
    let n = norm_sq(x)?;
    let inv = n.recip().ok_or(Error::ZeroNorm)?;
    Ok(conjugate(x)?.scale(&inv))
}

/// `q v q^{-1}` for a pure quaternion `v`.
pub fn rotate(q: &AlgElement, v: &AlgElement) -> Result<AlgElement> {
    if !matches!(q.algebra().kind(), AlgebraKind::Quaternion(_)) {
        return Err(Error::UnsupportedAlgebra);
    }
    if q.algebra() != v.algebra() {
        return Err(Error::AlgebraMismatch);
    }
    if !v.coord(0).is_zero() {
        return Err(Error::NotPureVector);
    }
    let qi = inverse_element(q)?;
    q.multiply(v)?.multiply(&qi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn el(alg: &FreeAlgebra, c: &[i64]) -> AlgElement {
        AlgElement::from_ints(alg, c).unwrap()
    }

    #[test]
    fn complex_basics() {
        let c = complex_algebra();
        let i = el(&c, &[0, 1]);
        assert_eq!(&i * &i, el(&c, &[-1, 0]));
        assert!(c.is_commutative() && c.is_associative());
        assert_eq!(conjugate(&i).unwrap(), el(&c, &[0, -1]));
        assert_eq!(i.commutator(&el(&c, &[3, -2])).unwrap(), AlgElement::zero(&c));
    }

    #[test]
    fn hamilton_products() {
        let h = hamilton();
        let (i, j, k) = (el(&h, &[0, 1, 0, 0]), el(&h, &[0, 0, 1, 0]), el(&h, &[0, 0, 0, 1]));
        assert_eq!(&i * &j, k);
        assert_eq!(i.commutator(&j).unwrap(), k.scale(&q(2, 1)));
        assert!(!h.is_commutative());
        assert!(h.is_associative());
        assert!(h.associator_vanishes_on_basis());
        assert!(!i.in_center());
        assert!(el(&h, &[7, 0, 0, 0]).in_center());
    }

    #[test]
    fn split_quaternion_i_times_k() {
        let p = QuaternionParams::new(q(1, 1), q(1, 1)).unwrap();
        let e = quaternion_algebra(&p);
        assert_eq!(&el(&e, &[0, 1, 0, 0]) * &el(&e, &[0, 0, 0, 1]), el(&e, &[0, 0, 1, 0]));
        assert_eq!(norm_sq(&el(&e, &[0, 1, 0, 0])).unwrap(), q(-1, 1));
        assert_eq!(QuaternionParams::new(q(0, 1), q(1, 1)).unwrap_err(), Error::DegenerateParams);
    }

    #[test]
    fn octonion_table_entries() {
        let o = octonion_algebra();
        let e = |i| AlgElement::basis(&o, i);
        assert_eq!(&e(5) * &e(6), -&e(3));
        assert_eq!(&e(4) * &e(4), -&e(0));
        assert_eq!(&e(1) * &e(4), e(5));
        assert_eq!(e(1).associator(&e(2), &e(4)).unwrap(), e(7).scale(&q(2, 1)));
        assert!(!o.is_associative());
        assert!(!o.associator_vanishes_on_basis());
        assert!(!o.is_commutative());
        assert!(e(0).in_nucleus());
        assert!(!e(1).in_nucleus());
    }

    #[test]
    fn norms_inverses_rotation() {
        let h = hamilton();
        assert_eq!(norm_sq(&el(&h, &[1, 1, 1, 1])).unwrap(), q(4, 1));
        let inv = inverse_element(&el(&h, &[1, 1, 0, 0])).unwrap();
        assert_eq!(inv, AlgElement::new(&h, vec![q(1, 2), q(-1, 2), q(0, 1), q(0, 1)]).unwrap());
        assert_eq!(inverse_element(&AlgElement::zero(&h)).unwrap_err(), Error::ZeroNorm);
        let r = rotate(&el(&h, &[1, 1, 0, 0]), &el(&h, &[0, 0, 1, 0])).unwrap();
        assert_eq!(r, el(&h, &[0, 0, 0, 1]));
        assert_eq!(rotate(&el(&h, &[1, 0, 0, 0]), &el(&h, &[1, 0, 0, 0])).unwrap_err(), Error::NotPureVector);
        let o = octonion_algebra();
        assert_eq!(rotate(&AlgElement::basis(&o, 0), &AlgElement::basis(&o, 1)).unwrap_err(), Error::UnsupportedAlgebra);
    }

    #[test]
    fn custom_algebras_have_no_conjugation() {
        let a = FreeAlgebra::new(1, vec![], vec![(0, 0, 0, q(1, 1))], Some(0)).unwrap();
        assert_eq!(conjugate(&AlgElement::basis(&a, 0)).unwrap_err(), Error::UnsupportedAlgebra);
        assert_eq!(norm_sq(&AlgElement::basis(&a, 0)).unwrap_err(), Error::UnsupportedAlgebra);
    }
}
