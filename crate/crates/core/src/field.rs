//! Finite fields GF(q) by explicit tables. Elements are `0..q`, read as
//! base-p digit vectors of polynomials modulo a fixed irreducible.

use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct GaloisField {
    q: usize,
    p: usize,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
}

/// Low-to-high coefficients of the monic irreducible for each supported
/// prime power, leading coefficient omitted.
fn modulus(q: usize) -> Option<(usize, Vec<usize>)> {
    match q {
        4 => Some((2, vec![1, 1])),
        8 => Some((2, vec![1, 1, 0])),
        9 => Some((3, vec![1, 0])),
        16 => Some((2, vec![1, 1, 0, 0])),
        25 => Some((5, vec![2, 1])),
        27 => Some((3, vec![1, 2, 0])),
        _ if is_prime(q) => Some((q, vec![])),
        _ => None,
    }
}

fn is_prime(q: usize) -> bool {
    q >= 2 && (2..).take_while(|d| d * d <= q).all(|d| !q.is_multiple_of(d))
}

fn digits(x: usize, p: usize, m: usize) -> Vec<usize> {
    let mut v = Vec::with_capacity(m);
    let mut x = x;
    for _ in 0..m {
        v.push(x % p);
        x /= p;
    }
    v
}

fn undigits(v: &[usize], p: usize) -> usize {
    v.iter().rev().fold(0, |acc, &d| acc * p + d)
}

impl GaloisField {
    /// Supported orders: primes below 256 and 4, 8, 9, 16, 25, 27.
    pub fn new(q: usize) -> Result<GaloisField> {
        if q > 255 {
            return Err(Error::UnsupportedField(q));
        }
        let (p, poly) = modulus(q).ok_or(Error::UnsupportedField(q))?;
        let m = poly.len().max(1);
        let mut add = vec![0u8; q * q];
        let mut mul = vec![0u8; q * q];
        for x in 0..q {
            let dx = digits(x, p, m);
            for y in 0..q {
                let dy = digits(y, p, m);
                let s: Vec<usize> = dx.iter().zip(&dy).map(|(a, b)| (a + b) % p).collect();
                add[x * q + y] = undigits(&s, p) as u8;
                let mut prod = vec![0usize; 2 * m];
                for (i, a) in dx.iter().enumerate() {
                    for (j, b) in dy.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + a * b) % p;
                    }
                }
                // Reduce using x^m = −Σ poly[k] x^k.
                for d in (m..2 * m).rev() {
                    let c = prod[d];
                    if c == 0 {
                        continue;
                    }
                    prod[d] = 0;
                    for (k, &pk) in poly.iter().enumerate() {
                        prod[d - m + k] = (prod[d - m + k] + (p - pk % p) * c) % p;
                    }
                }
                mul[x * q + y] = undigits(&prod[..m], p) as u8;
            }
        }
        let neg = (0..q).map(|x| (0..q).find(|&y| add[x * q + y] == 0).unwrap() as u8).collect();
        let mut inv = vec![0u8; q];
        for x in 1..q {
            inv[x] = (1..q).find(|&y| mul[x * q + y] == 1).ok_or(Error::UnsupportedField(q))? as u8;
        }
        Ok(GaloisField { q, p, add, mul, neg, inv })
    }

    pub fn order(&self) -> usize {
        self.q
    }

    pub fn characteristic(&self) -> usize {
        self.p
    }

    pub fn add(&self, x: u8, y: u8) -> u8 {
        self.add[x as usize * self.q + y as usize]
    }

    pub fn mul(&self, x: u8, y: u8) -> u8 {
        self.mul[x as usize * self.q + y as usize]
    }

    pub fn neg(&self, x: u8) -> u8 {
        self.neg[x as usize]
    }

    pub fn sub(&self, x: u8, y: u8) -> u8 {
        self.add(x, self.neg(y))
    }

    /// Multiplicative inverse; `inv(0)` is reported as 0.
    pub fn inv(&self, x: u8) -> u8 {
        self.inv[x as usize]
    }

    pub fn det3(&self, a: [u8; 3], b: [u8; 3], c: [u8; 3]) -> u8 {
        let m = |x, y| self.mul(x, y);
        let t1 = m(a[0], self.sub(m(b[1], c[2]), m(b[2], c[1])));
        let t2 = m(a[1], self.sub(m(b[0], c[2]), m(b[2], c[0])));
        let t3 = m(a[2], self.sub(m(b[0], c[1]), m(b[1], c[0])));
        self.add(self.sub(t1, t2), t3)
    }

    pub fn cross(&self, a: [u8; 3], b: [u8; 3]) -> [u8; 3] {
        let m = |x, y| self.mul(x, y);
        [
            self.sub(m(a[1], b[2]), m(a[2], b[1])),
            self.sub(m(a[2], b[0]), m(a[0], b[2])),
            self.sub(m(a[0], b[1]), m(a[1], b[0])),
        ]
    }

    /// Scales so the first nonzero coordinate is 1.
    pub fn normalize(&self, v: [u8; 3]) -> Option<[u8; 3]> {
        let lead = *v.iter().find(|&&x| x != 0)?;
        let s = self.inv(lead);
        Some([self.mul(v[0], s), self.mul(v[1], s), self.mul(v[2], s)])
    }
}
