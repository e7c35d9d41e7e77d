//! Arithmetic in prime fields `Z/pZ` with `p < 2^63`.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

pub const MERSENNE_61: u64 = (1 << 61) - 1;

#[inline]
pub fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

#[inline]
pub fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

#[inline]
pub fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Inverse of a unit modulo the prime `p`.
pub fn inv_mod(a: u64, p: u64) -> u64 {
    assert!(!a.is_multiple_of(p), "zero has no inverse");
    pow_mod(a, p - 2, p)
}

pub fn bigint_mod(v: &BigInt, p: u64) -> u64 {
    let r = v % BigInt::from(p);
    let r = if r.sign() == num_bigint::Sign::Minus { r + BigInt::from(p) } else { r };
    r.to_u64().expect("residue fits in u64")
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for small in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(small) {
            return n == small;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    // These bases are deterministic for all 64-bit integers.
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Descending list of primes just below `2^62`.
pub fn large_primes() -> &'static [u64] {
    static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let mut out = Vec::with_capacity(64);
        let mut candidate = (1u64 << 62) - 1;
        while out.len() < 64 {
            if is_prime(candidate) {
                out.push(candidate);
            }
            candidate -= 2;
        }
        out
    })
}

/// Lifts residues `values[i] mod primes[i]` to the unique integer in the
/// symmetric range `(-M/2, M/2]`, `M = Π primes`.
pub fn crt_symmetric(values: &[u64], primes: &[u64]) -> BigInt {
    let mut acc = BigInt::from(0);
    let mut modulus = BigInt::from(1);
    for (&v, &p) in values.iter().zip(primes) {
        // acc + modulus * k ≡ v (mod p)
        let acc_mod = bigint_mod(&acc, p);
        let m_mod = bigint_mod(&modulus, p);
        let k = mul_mod(sub_mod(v, acc_mod, p), inv_mod(m_mod, p), p);
        acc += &modulus * BigInt::from(k);
        modulus *= BigInt::from(p);
    }
    if &acc * 2 > modulus {
        acc - modulus
    } else {
        acc
    }
}

/// Primes from [`large_primes`] whose product exceeds `2 * bound + 1`, enough
/// for [`crt_symmetric`] to recover any integer of absolute value `<= bound`.
pub fn primes_for_bound(bound: &BigInt) -> Option<Vec<u64>> {
    let needed = bound * 2 + BigInt::from(1);
    let mut primes = Vec::new();
    let mut modulus = BigInt::from(1);
    for &p in large_primes() {
        if modulus > needed {
            return Some(primes);
        }
        primes.push(p);
        modulus *= BigInt::from(p);
    }
    (modulus > needed).then_some(primes)
}

/// Integer coefficients of a polynomial of degree `<= degree` whose
/// coefficients are bounded by `bound` in absolute value, recovered from
/// `eval(r, p)` = value at `r` modulo `p`.
pub fn interpolate_exact(degree: usize, bound: &BigInt, eval: impl Fn(u64, u64) -> u64) -> Option<Vec<BigInt>> {
    let primes = primes_for_bound(bound)?;
    let xs: Vec<u64> = (1..=degree as u64 + 1).collect();
    let per_prime: Vec<Vec<u64>> = primes
        .iter()
        .map(|&p| {
            let ys: Vec<u64> = xs.iter().map(|&r| eval(r, p)).collect();
            interpolate(&xs, &ys, p)
        })
        .collect();
    Some(
        (0..=degree)
            .map(|k| {
                let residues: Vec<u64> = per_prime.iter().map(|v| v[k]).collect();
                crt_symmetric(&residues, &primes)
            })
            .collect(),
    )
}

/// Coefficients (lowest degree first) of the unique polynomial of degree
/// `< xs.len()` through the points `(xs[i], ys[i])` over `Z/pZ`.
pub fn interpolate(xs: &[u64], ys: &[u64], p: u64) -> Vec<u64> {
    let n = xs.len();
    // Newton divided differences.
    let mut coef = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            let num = sub_mod(coef[i], coef[i - 1], p);
            let den = sub_mod(xs[i], xs[i - j], p);
            coef[i] = mul_mod(num, inv_mod(den, p), p);
        }
    }
    // Expand the Newton form into monomial coefficients.
    let mut poly = vec![0u64; n];
    for i in (0..n).rev() {
        // poly = poly * (x - xs[i]) + coef[i]
        let mut next = vec![0u64; n];
        for k in 0..n {
            if poly[k] == 0 {
                continue;
            }
            if k + 1 < n {
                next[k + 1] = add_mod(next[k + 1], poly[k], p);
            }
            next[k] = sub_mod(next[k], mul_mod(poly[k], xs[i], p), p);
        }
        next[0] = add_mod(next[0], coef[i], p);
        poly = next;
    }
    poly
}

/// Determinant over `Z/pZ` by Gaussian elimination; consumes the matrix.
pub fn det_mod(mut a: Vec<Vec<u64>>, p: u64) -> u64 {
    let n = a.len();
    let mut det = 1u64;
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| a[r][col] != 0) else {
            return 0;
        };
        if pivot != col {
            a.swap(pivot, col);
            det = sub_mod(0, det, p);
        }
        let pv = a[col][col];
        det = mul_mod(det, pv, p);
        let inv = inv_mod(pv, p);
        for r in col + 1..n {
            let factor = mul_mod(a[r][col], inv, p);
            if factor == 0 {
                continue;
            }
            let (top, bottom) = a.split_at_mut(r);
            let pivot_row = &top[col];
            for (x, &y) in bottom[0][col..].iter_mut().zip(&pivot_row[col..]) {
                *x = sub_mod(*x, mul_mod(factor, y, p), p);
            }
        }
    }
    det
}
