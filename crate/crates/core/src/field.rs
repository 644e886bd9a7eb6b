//! Exact coefficient fields: the rationals and small finite fields F_p, F_{p^k}.
//!
//! Everything downstream (polynomials, loci, theorem checks) is generic over
//! [`Field`]. The three scalar types are [`Rational`] (arbitrary precision,
//! via `num`), [`Fp`] (prime fields, const-generic in the prime), and [`Fq`]
//! (extension fields, const-generic in prime and extension degree, with a
//! deterministic compile-time choice of irreducible modulus).

use std::fmt;
use std::hash::Hash;
use std::ops::{Div, Neg, Sub};

use num::BigRational;
use num_traits::{One, Zero};

/// An exact field of scalars.
///
/// Beyond the arithmetic supertraits, a field knows its characteristic and
/// (when finite) its order, can embed integers, invert nonzero elements,
/// enumerate itself in a fixed order, and extract p-th roots in
/// characteristic p.
pub trait Field:
    Clone
    + PartialEq
    + Eq
    + Hash
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
    + Div<Output = Self>
    + Send
    + Sync
    + 'static
{
    /// 0 for the rationals, p for F_{p^k}.
    fn characteristic() -> u64;

    /// Number of elements, or `None` for infinite fields.
    fn order() -> Option<u64>;

    /// Image of an integer under the canonical map Z -> K.
    fn from_integer(n: i64) -> Self;

    /// Multiplicative inverse; `None` exactly for zero.
    fn inverse(&self) -> Option<Self>;

    /// All elements in a fixed deterministic order; empty for infinite fields.
    fn elements() -> Vec<Self>;

    /// The unique p-th root in characteristic p; `None` in characteristic 0.
    fn pth_root(&self) -> Option<Self>;

    /// Square-and-multiply power with a nonnegative integer exponent.
    fn pow_u(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            base = base.clone() * base;
            e >>= 1;
        }
        acc
    }

    /// The unique p^e-th root in characteristic p (`pth_root` iterated).
    fn peth_root(&self, e: u32) -> Option<Self> {
        let mut v = self.clone();
        for _ in 0..e {
            v = v.pth_root()?;
        }
        Some(v)
    }
}

/// The field of rational numbers, arbitrary precision.
pub type Rational = BigRational;

impl Field for BigRational {
    fn characteristic() -> u64 {
        0
    }

    fn order() -> Option<u64> {
        None
    }

    fn from_integer(n: i64) -> Self {
        BigRational::from_integer(n.into())
    }

    fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn elements() -> Vec<Self> {
        Vec::new()
    }

    fn pth_root(&self) -> Option<Self> {
        None
    }
}

/// Compile-time primality test for the `Fp` parameter.
const fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// The prime field F_P, elements stored as canonical representatives `0..P`.
///
/// # Example
///
/// ```
/// use pencilbox::field::{Field, Fp};
/// let a = Fp::<5>::from_integer(7);
/// let b = Fp::<5>::from_integer(-1);
/// assert_eq!((a * b).to_string(), "3"); // 2 * 4 = 8 = 3 mod 5
/// ```
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Fp<const P: u64> {
    v: u64,
}

impl<const P: u64> Fp<P> {
    const CHECK: () = {
        assert!(is_prime(P), "Fp parameter must be prime");
        assert!(P < (1 << 31), "Fp parameter out of supported range");
    };

    /// The canonical representative of `v` mod P.
    pub fn new(v: u64) -> Self {
        #[allow(clippy::let_unit_value)]
        let _ = Self::CHECK;
        Fp { v: v % P }
    }

    /// The representative in `0..P`.
    pub fn rep(&self) -> u64 {
        self.v
    }
}

impl<const P: u64> fmt::Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.v)
    }
}

impl<const P: u64> std::ops::Add for Fp<P> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Fp {
            v: (self.v + rhs.v) % P,
        }
    }
}

impl<const P: u64> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Fp {
            v: (self.v + P - rhs.v) % P,
        }
    }
}

impl<const P: u64> std::ops::Mul for Fp<P> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Fp {
            v: ((self.v as u128 * rhs.v as u128) % P as u128) as u64,
        }
    }
}

impl<const P: u64> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        Fp {
            v: (P - self.v) % P,
        }
    }
}

impl<const P: u64> Div for Fp<P> {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        self * rhs.inverse().expect("division by zero in Fp")
    }
}

impl<const P: u64> Zero for Fp<P> {
    fn zero() -> Self {
        Fp::new(0)
    }
    fn is_zero(&self) -> bool {
        self.v == 0
    }
}

impl<const P: u64> One for Fp<P> {
    fn one() -> Self {
        Fp::new(1)
    }
}

impl<const P: u64> Field for Fp<P> {
    fn characteristic() -> u64 {
        P
    }

    fn order() -> Option<u64> {
        Some(P)
    }

    fn from_integer(n: i64) -> Self {
        let m = n.rem_euclid(P as i64) as u64;
        Fp::new(m)
    }

    fn inverse(&self) -> Option<Self> {
        if self.v == 0 {
            None
        } else {
            // Fermat: a^(P-2) for the desk-scale primes we instantiate.
            Some(self.pow_u(P - 2))
        }
    }

    fn elements() -> Vec<Self> {
        (0..P).map(Fp::new).collect()
    }

    fn pth_root(&self) -> Option<Self> {
        // Frobenius is the identity on F_p.
        Some(*self)
    }
}

/// Degree bound for the compile-time modulus search (comfortable for k <= 8).
const MODULUS_SLOTS: usize = 16;

/// Remainder of a monic division step chain: reduces `a` (degree `da`) by the
/// monic divisor `d` (degree `dd`), in place, over F_p. Returns true iff the
/// remainder is zero.
const fn divides_monic(
    mut a: [u64; MODULUS_SLOTS],
    da: usize,
    d: [u64; MODULUS_SLOTS],
    dd: usize,
    p: u64,
) -> bool {
    let mut i = da;
    loop {
        if i < dd {
            break;
        }
        let c = a[i];
        if c != 0 {
            a[i] = 0;
            let mut j = 0;
            while j < dd {
                let sub = (c * d[j]) % p;
                a[i - dd + j] = (a[i - dd + j] + p - sub) % p;
                j += 1;
            }
        }
        if i == 0 {
            break;
        }
        i -= 1;
    }
    let mut j = 0;
    while j < dd {
        if a[j] != 0 {
            return false;
        }
        j += 1;
    }
    true
}

/// Finds the lexicographically lowest monic irreducible of degree `k` over
/// F_p: candidates x^k + c_{k-1}x^{k-1} + ... + c_0 are scanned in increasing
/// order of the integer c_0 + c_1 p + ... and tested by trial division
/// against every monic divisor of degree 1..=k/2.
const fn lowest_irreducible(p: u64, k: usize) -> [u64; MODULUS_SLOTS] {
    let mut enc: u64 = 0;
    loop {
        // decode candidate
        let mut cand = [0u64; MODULUS_SLOTS];
        let mut e = enc;
        let mut i = 0;
        while i < k {
            cand[i] = e % p;
            e /= p;
            i += 1;
        }
        cand[k] = 1;

        let mut irreducible = true;
        let mut dd = 1;
        while dd * 2 <= k && irreducible {
            // every monic divisor of degree dd
            let mut denc: u64 = 0;
            let mut dlimit: u64 = 1;
            let mut t = 0;
            while t < dd {
                dlimit *= p;
                t += 1;
            }
            while denc < dlimit {
                let mut div = [0u64; MODULUS_SLOTS];
                let mut de = denc;
                let mut j = 0;
                while j < dd {
                    div[j] = de % p;
                    de /= p;
                    j += 1;
                }
                div[dd] = 1;
                if divides_monic(cand, k, div, dd, p) {
                    irreducible = false;
                    break;
                }
                denc += 1;
            }
            dd += 1;
        }
        if irreducible {
            return cand;
        }
        enc += 1;
    }
}

/// The extension field F_{P^K} = F_P[z]/(m(z)), with m the lexicographically
/// lowest monic irreducible of degree K (computed at compile time).
///
/// Elements are stored as coefficient vectors `c_0 + c_1 z + ... + c_{K-1}
/// z^{K-1}` with each `c_i` in `0..P`.
///
/// # Example
///
/// ```
/// use pencilbox::field::{Field, Fq};
/// type F9 = Fq<3, 2>;
/// let z = F9::generator();
/// assert_eq!((z * z).to_string(), "2"); // modulus z^2 + 1, so z^2 = -1
/// ```
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Fq<const P: u64, const K: usize> {
    c: [u64; K],
}

impl<const P: u64, const K: usize> Fq<P, K> {
    const CHECK: () = {
        assert!(is_prime(P), "Fq characteristic must be prime");
        assert!(
            K >= 1 && K < MODULUS_SLOTS,
            "Fq extension degree out of range"
        );
        assert!(P < (1 << 15), "Fq characteristic out of supported range");
    };

    /// Modulus coefficients: MODULUS[0..K] are the low coefficients of the
    /// monic irreducible m(z) = z^K + sum MODULUS[j] z^j.
    pub const MODULUS: [u64; MODULUS_SLOTS] = {
        #[allow(clippy::let_unit_value)]
        let _ = Self::CHECK;
        lowest_irreducible(P, K)
    };

    /// Element from low-to-high coefficients mod P.
    pub fn from_coeffs(raw: [u64; K]) -> Self {
        let mut c = [0u64; K];
        let mut i = 0;
        while i < K {
            c[i] = raw[i] % P;
            i += 1;
        }
        Fq { c }
    }

    /// The residue class of z itself (a generator of the extension over F_P).
    pub fn generator() -> Self {
        let mut c = [0u64; K];
        if K > 1 {
            c[1] = 1;
        } else {
            // K = 1 degenerates to F_P with z = -MODULUS[0]
            c[0] = (P - Self::MODULUS[0]) % P;
        }
        Fq { c }
    }

    /// Low-to-high coefficients over F_P.
    pub fn coeffs(&self) -> [u64; K] {
        self.c
    }

    /// Element with index `i` in the fixed enumeration order (base-P digits).
    fn from_index(mut i: u64) -> Self {
        let mut c = [0u64; K];
        let mut j = 0;
        while j < K {
            c[j] = i % P;
            i /= P;
            j += 1;
        }
        Fq { c }
    }

    fn reduce(buf: &mut [u64; 2 * MODULUS_SLOTS]) -> [u64; K] {
        let mut i = 2 * K - 2;
        while i >= K {
            let c = buf[i] % P;
            buf[i] = 0;
            if c != 0 {
                for j in 0..K {
                    let sub = (c as u128 * Self::MODULUS[j] as u128 % P as u128) as u64;
                    buf[i - K + j] = (buf[i - K + j] + P - sub) % P;
                }
            }
            i -= 1;
        }
        let mut out = [0u64; K];
        out[..K].copy_from_slice(&buf[..K]);
        out
    }
}

impl<const P: u64, const K: usize> fmt::Display for Fq<P, K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for i in (0..K).rev() {
            let c = self.c[i];
            if c == 0 {
                continue;
            }
            if wrote {
                write!(f, "+")?;
            }
            match i {
                0 => write!(f, "{c}")?,
                1 => {
                    if c != 1 {
                        write!(f, "{c}")?;
                    }
                    write!(f, "z")?;
                }
                _ => {
                    if c != 1 {
                        write!(f, "{c}")?;
                    }
                    write!(f, "z^{i}")?;
                }
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl<const P: u64, const K: usize> std::ops::Add for Fq<P, K> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let mut c = [0u64; K];
        for i in 0..K {
            c[i] = (self.c[i] + rhs.c[i]) % P;
        }
        Fq { c }
    }
}

impl<const P: u64, const K: usize> Sub for Fq<P, K> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        let mut c = [0u64; K];
        for i in 0..K {
            c[i] = (self.c[i] + P - rhs.c[i]) % P;
        }
        Fq { c }
    }
}

impl<const P: u64, const K: usize> std::ops::Mul for Fq<P, K> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let mut buf = [0u64; 2 * MODULUS_SLOTS];
        for i in 0..K {
            if self.c[i] == 0 {
                continue;
            }
            for j in 0..K {
                let prod = (self.c[i] as u128 * rhs.c[j] as u128) % P as u128;
                buf[i + j] = ((buf[i + j] as u128 + prod) % P as u128) as u64;
            }
        }
        Fq {
            c: Self::reduce(&mut buf),
        }
    }
}

impl<const P: u64, const K: usize> Neg for Fq<P, K> {
    type Output = Self;
    fn neg(self) -> Self {
        let mut c = [0u64; K];
        for i in 0..K {
            c[i] = (P - self.c[i]) % P;
        }
        Fq { c }
    }
}

impl<const P: u64, const K: usize> Div for Fq<P, K> {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        self * rhs.inverse().expect("division by zero in Fq")
    }
}

impl<const P: u64, const K: usize> Zero for Fq<P, K> {
    fn zero() -> Self {
        Fq { c: [0u64; K] }
    }
    fn is_zero(&self) -> bool {
        self.c.iter().all(|&x| x == 0)
    }
}

impl<const P: u64, const K: usize> One for Fq<P, K> {
    fn one() -> Self {
        let mut c = [0u64; K];
        c[0] = 1;
        Fq { c }
    }
}

impl<const P: u64, const K: usize> Field for Fq<P, K> {
    fn characteristic() -> u64 {
        P
    }

    fn order() -> Option<u64> {
        let mut q: u64 = 1;
        for _ in 0..K {
            q = q.checked_mul(P).expect("field order overflow");
        }
        Some(q)
    }

    fn from_integer(n: i64) -> Self {
        let mut c = [0u64; K];
        c[0] = n.rem_euclid(P as i64) as u64;
        Fq { c }
    }

    fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            let q = Self::order().unwrap();
            Some(self.pow_u(q - 2))
        }
    }

    fn elements() -> Vec<Self> {
        let q = Self::order().unwrap();
        (0..q).map(Self::from_index).collect()
    }

    fn pth_root(&self) -> Option<Self> {
        // Frobenius x -> x^p is a field automorphism of order K, so its
        // inverse is x -> x^(p^(K-1)).
        let mut e: u64 = 1;
        for _ in 0..K - 1 {
            e = e.checked_mul(P).expect("exponent overflow");
        }
        Some(self.pow_u(e))
    }
}
