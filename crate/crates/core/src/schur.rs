//! Schur functor dimensions, Euler characteristics of twisted forms on
//! projective space, Bott vanishing, and the rank / first Chern class check
//! behind `Sym^k(T_X (d - 3)) = S_(k^(n-1)) Omega_X ((n - 1) k)` on a
//! hypersurface.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{binomial_q, int, Rational};

/// Weakly decreasing sequence of non-negative integers, trailing zeros dropped.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::out_of_range(
                "partition (not weakly decreasing)",
                format!("{parts:?}"),
            ));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    /// `(k, ..., k)` with `rows` parts.
    pub fn rectangle(k: u32, rows: u32) -> Self {
        if k == 0 {
            return Partition(Vec::new());
        }
        Partition(vec![k; rows as usize])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Parts padded with zeros to `rows` entries.
    pub fn padded(&self, rows: usize) -> Vec<i64> {
        let mut v: Vec<i64> = self.0.iter().map(|&x| x as i64).collect();
        v.resize(rows.max(v.len()), 0);
        v
    }

    /// All partitions of `weight` with at most `max_rows` parts.
    pub fn all_of_weight(weight: u32, max_rows: usize) -> Vec<Partition> {
        fn go(rest: u32, cap: u32, rows: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            if rows == 0 {
                return;
            }
            for part in (1..=cap.min(rest)).rev() {
                cur.push(part);
                go(rest - part, part, rows - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(weight, weight, max_rows, &mut Vec::new(), &mut out);
        out
    }
}

impl std::str::FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts = s
            .split(',')
            .map(|t| t.trim())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<u32>()
                    .map_err(|_| Error::out_of_range("partition part", t))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// `dim S_mu(V)` for `dim V = n`, by the Weyl product
/// `prod_{i<j} (mu_i - mu_j + j - i) / (j - i)`; zero when `mu` has more
/// than `n` parts.
pub fn schur_dim(mu: &Partition, n: usize) -> BigInt {
    if mu.len() > n {
        return BigInt::zero();
    }
    let m = mu.padded(n);
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..n {
        for j in i + 1..n {
            num *= m[i] - m[j] + (j - i) as i64;
            den *= (j - i) as i64;
        }
    }
    num / den
}

pub fn sym_dim(n: u64, k: u64) -> BigInt {
    binomial((n + k) as i64 - 1, k as i64)
}

/// `schur_dim((k^(n-1)), n) == C(n + k - 1, n - 1)`.
pub fn plethysm_rectangle_check(n: u32, k: u32) -> Result<bool> {
    if n < 2 || k == 0 {
        return Err(Error::out_of_range(
            "(n, k) for the rectangle identity",
            format!("({n}, {k})"),
        ));
    }
    let rect = Partition::rectangle(k, n - 1);
    Ok(schur_dim(&rect, n as usize) == binomial((n + k - 1) as i64, (n - 1) as i64))
}

/// `dim Sym^k(wedge^m V) >= dim S_(k^m)(V)` for `dim V = n`, the dimension
/// shadow of the direct-summand statement.
pub fn plethysm_summand_bound(m: u32, n: u32, k: u32) -> Result<bool> {
    if m == 0 || m > n {
        return Err(Error::out_of_range("wedge degree", m));
    }
    let wedge = binomial(n as i64, m as i64);
    let sym = binomial(&wedge + BigInt::from(k) - 1, k);
    Ok(sym >= schur_dim(&Partition::rectangle(k, m), n as usize))
}

fn binomial(top: impl Into<BigInt>, k: impl Into<i64>) -> BigInt {
    let top: BigInt = top.into();
    let k: i64 = k.into();
    match i64::try_from(&top) {
        Ok(t) => crate::rational::binomial(t, k),
        Err(_) => {
            let mut acc = BigInt::one();
            for i in 0..k {
                acc = acc * (&top - i) / (i + 1);
            }
            acc
        }
    }
}

/// `chi(P^n, O(m)) = C(m + n, n)`, valid for every integer `m`.
pub fn chi_line_bundle(n: u32, m: i64) -> Rational {
    binomial_q(m + n as i64, n as i64)
}

/// `chi(P^n, Omega^p(k))` from the twisted Euler sequence
/// `chi(Omega^p(k)) = C(n+1, p) chi(O(k-p)) - chi(Omega^(p-1)(k))`.
pub fn euler_char_forms(n: u32, p: u32, k: i64) -> Result<Rational> {
    if p > n {
        return Err(Error::out_of_range("form degree", p));
    }
    let mut chi = chi_line_bundle(n, k);
    for q in 1..=p {
        chi = binomial_q(n as i64 + 1, q as i64) * chi_line_bundle(n, k - q as i64) - chi;
    }
    Ok(chi)
}

/// `h^q(P^n, Omega^p(k))` by Bott's formula.
pub fn bott_cohomology(n: u32, p: u32, q: u32, k: i64) -> Result<BigInt> {
    if p > n {
        return Err(Error::out_of_range("form degree", p));
    }
    if q > n {
        return Err(Error::out_of_range("cohomological degree", q));
    }
    let (n_, p_) = (n as i64, p as i64);
    let h = if q == 0 && k > p_ {
        binomial(k + n_ - p_, k) * binomial(k - 1, p_)
    } else if k == 0 && p == q {
        BigInt::one()
    } else if q == n && k < p_ - n_ {
        binomial(p_ - k, -k) * binomial(-k - 1, n_ - p_)
    } else {
        BigInt::zero()
    };
    Ok(h)
}

/// `H^j(P^n, Omega^r(r + j + 1)) = 0` for `1 <= j <= n - 1`.
pub fn bott_vanishing(n: u32, r: u32, j: u32) -> Result<bool> {
    if r > n {
        return Err(Error::out_of_range("form degree", r));
    }
    if j == 0 || j >= n {
        return Err(Error::out_of_range("cohomological degree", j));
    }
    let h = bott_cohomology(n, r, j, (r + j + 1) as i64)?;
    Ok(h.is_zero())
}

/// `c_1(S_mu E) = (|mu| rank(S_mu E) / rank E) c_1(E)`: the multiplier of
/// `c_1(E)`.
pub fn schur_c1_multiplier(mu: &Partition, rank: usize) -> Rational {
    Rational::new(
        BigInt::from(mu.weight()) * schur_dim(mu, rank),
        BigInt::from(rank),
    )
}

/// Ranks and first Chern classes (as multiples of `H`) of both sides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BridgeSides {
    pub rank_lhs: BigInt,
    pub rank_rhs: BigInt,
    pub c1_lhs: Rational,
    pub c1_rhs: Rational,
}

impl BridgeSides {
    pub fn slope(&self) -> Rational {
        &self.c1_lhs / Rational::from_integer(self.rank_lhs.clone())
    }
}

/// Left side `Sym^k(T_X (d - 3))` via monomial counting; right side
/// `S_(k^(n-1)) Omega_X ((n - 1) k)` via the Schur multiplier.
pub fn bridge_sides(n: u32, d: u32, k: u32) -> Result<BridgeSides> {
    if n < 2 || d == 0 || k == 0 {
        return Err(Error::out_of_range("(n, d, k)", format!("({n}, {d}, {k})")));
    }
    let (n_, d_, k_) = (n as i64, d as i64, k as i64);
    // E = T_X(d - 3): rank n, c_1 = (n + 2 - d) + n (d - 3)
    let c1_e = int(n_ + 2 - d_ + n_ * (d_ - 3));
    let rank_lhs = sym_dim(n as u64, k as u64);
    // each root of E appears C(n + k - 1, n) times among the monomials of degree k
    let c1_lhs = binomial_q(n_ + k_ - 1, n_) * c1_e;

    let mu = Partition::rectangle(k, n - 1);
    let rank_rhs = schur_dim(&mu, n as usize);
    let c1_omega = int(d_ - n_ - 2);
    let twist = int((n_ - 1) * k_);
    let c1_rhs = schur_c1_multiplier(&mu, n as usize) * c1_omega
        + Rational::from_integer(rank_rhs.clone()) * twist;
    Ok(BridgeSides {
        rank_lhs,
        rank_rhs,
        c1_lhs,
        c1_rhs,
    })
}

pub fn bridge_identity_check(n: u32, d: u32, k: u32) -> Result<bool> {
    let s = bridge_sides(n, d, k)?;
    let expected_slope = Rational::new(
        BigInt::from(k as i64 * (n as i64 - 1) * (d as i64 - 2)),
        BigInt::from(n),
    );
    Ok(s.rank_lhs == s.rank_rhs
        && s.rank_lhs == binomial((n + k - 1) as i64, (n - 1) as i64)
        && s.c1_lhs == s.c1_rhs
        && s.slope() == expected_slope)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    #[test]
    fn partition_validation() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert_eq!(Partition::new(vec![3, 1, 0, 0]).unwrap().len(), 2);
        assert_eq!("2,2,1".parse::<Partition>().unwrap().weight(), 5);
        assert!("2,x".parse::<Partition>().is_err());
        assert_eq!(Partition::all_of_weight(4, 10).len(), 5);
        assert_eq!(Partition::all_of_weight(4, 2).len(), 3);
    }

    #[test]
    fn dimension_special_cases() {
        for n in 1..6usize {
            for k in 0..6u32 {
                let sym = Partition::new(vec![k]).unwrap();
                assert_eq!(
                    schur_dim(&sym, n),
                    binomial(n as i64 + k as i64 - 1, k as i64)
                );
            }
            for p in 0..=n + 1 {
                let wedge = Partition::new(vec![1; p]).unwrap();
                assert_eq!(schur_dim(&wedge, n), binomial(n as i64, p as i64));
            }
        }
        assert_eq!(
            schur_dim(&Partition::new(vec![2, 2]).unwrap(), 3),
            BigInt::from(6)
        );
    }

    #[test]
    fn rectangle_examples() {
        assert!(plethysm_rectangle_check(3, 2).unwrap());
        assert!(plethysm_rectangle_check(2, 5).unwrap());
        assert_eq!(schur_dim(&Partition::rectangle(4, 4), 5), BigInt::from(70));
        assert!(plethysm_rectangle_check(1, 2).is_err());
        for m in 1..=4 {
            for k in 1..=4 {
                assert!(plethysm_summand_bound(m, 4, k).unwrap());
            }
        }
    }

    #[test]
    fn euler_characteristics() {
        assert_eq!(euler_char_forms(2, 1, 1).unwrap(), int(0));
        assert_eq!(euler_char_forms(2, 1, 2).unwrap(), int(3));
        assert_eq!(euler_char_forms(4, 0, 3).unwrap(), int(35));
        assert!(euler_char_forms(2, 3, 0).is_err());
        for p in 0..=4 {
            assert_eq!(
                euler_char_forms(4, p, 0).unwrap(),
                int(if p % 2 == 0 { 1 } else { -1 })
            );
        }
    }

    #[test]
    fn bott_matches_euler_characteristic() {
        for n in 1..=5 {
            for p in 0..=n {
                for k in -8..=8 {
                    let alt: BigInt = (0..=n)
                        .map(|q| {
                            let h = bott_cohomology(n, p, q, k).unwrap();
                            if q % 2 == 0 {
                                h
                            } else {
                                -h
                            }
                        })
                        .sum();
                    assert_eq!(
                        Rational::from_integer(alt),
                        euler_char_forms(n, p, k).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn quoted_vanishing() {
        assert!(bott_vanishing(3, 1, 1).unwrap());
        assert!(bott_vanishing(5, 2, 3).unwrap());
        assert!(bott_vanishing(3, 1, 3).is_err());
        assert!(bott_vanishing(3, 4, 1).is_err());
        assert_eq!(bott_cohomology(3, 2, 2, 0).unwrap(), BigInt::one());
    }

    #[test]
    fn bridge_examples() {
        let s = bridge_sides(2, 3, 7).unwrap();
        assert_eq!(s.slope(), Rational::new(7.into(), 2.into()));
        assert!(bridge_identity_check(2, 3, 7).unwrap());
        let s = bridge_sides(4, 3, 2).unwrap();
        assert_eq!(s.rank_lhs, BigInt::from(10));
        assert!(bridge_identity_check(4, 3, 2).unwrap());
        // T_X(2) on a quintic threefold: c_1 = (3 + 2 - 5) + 3 * 2 = 6
        let s = bridge_sides(3, 5, 1).unwrap();
        assert_eq!(s.c1_lhs, int(6));
        assert!(bridge_identity_check(3, 5, 1).unwrap());
    }
}
