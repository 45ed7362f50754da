//! The helper-index bookkeeping behind the packet-exchange induction: a
//! strictly increasing relabeling `a_t` and the partition of relabeled
//! helpers into bandwidth-sized groups.

use crate::error::{Error, Result};

/// Decomposition d+1-j = s(d-m) + r with r in [1 : d-m], plus the groups
/// tau_0 (r helpers), tau_1 .. tau_s (d-m helpers each).
#[derive(Debug, Clone)]
pub struct TauPartition {
    pub d: u32,
    pub m: u32,
    pub i: u32,
    pub i_prime: u32,
    pub j: u32,
    pub s: u32,
    pub r: u32,
    /// a[t-1] is the relabeled index of t, for t in [1 : d+1-j].
    pub a: Vec<u32>,
    /// tau[q] for q in [0 : s]; each sorted ascending.
    pub tau: Vec<Vec<u32>>,
}

/// Valid parameter tuples: m in [1 : d-1], i in [0 : m-1], i' in [0 : i],
/// j in [i'+1 : min(m-i+i'+1, m)]. (j = m+1 is the trivial equality case
/// of the exchange inequality and is handled there directly, never built
/// here.)
pub fn build_tau(d: u32, m: u32, i: u32, i_prime: u32, j: u32) -> Result<TauPartition> {
    if !(1..d).contains(&m) {
        return Err(Error::InvalidParams(format!(
            "m={m} outside [1 : {}]",
            d - 1
        )));
    }
    if i >= m {
        return Err(Error::InvalidParams(format!(
            "i={i} outside [0 : {}]",
            m - 1
        )));
    }
    if i_prime > i {
        return Err(Error::InvalidParams(format!(
            "i'={i_prime} outside [0 : {i}]"
        )));
    }
    let j_max = (m - i + i_prime + 1).min(m);
    if !(i_prime + 1..=j_max).contains(&j) {
        return Err(Error::InvalidParams(format!(
            "j={j} outside [{} : {j_max}]",
            i_prime + 1
        )));
    }
    let total = d + 1 - j; // number of relabeled indices; exceeds d - m since j <= m
    let width = d - m;
    let s = (total - 1) / width;
    let r = total - s * width;
    debug_assert!(s >= 1 && (1..=width).contains(&r));

    let a: Vec<u32> = (1..=total)
        .map(|t| {
            if t <= i - i_prime {
                t + i_prime
            } else if t <= m - j + 1 {
                t + j - 1
            } else {
                t + j
            }
        })
        .collect();

    let mut tau = Vec::with_capacity(s as usize + 1);
    tau.push(a[..r as usize].to_vec());
    for q in 1..=s {
        let lo = (r + (q - 1) * width) as usize;
        let hi = (r + q * width) as usize;
        tau.push(a[lo..hi].to_vec());
    }

    let part = TauPartition {
        d,
        m,
        i,
        i_prime,
        j,
        s,
        r,
        a,
        tau,
    };
    part.verify()?;
    Ok(part)
}

impl TauPartition {
    /// The union of tau_0 .. tau_p, sorted.
    pub fn union_up_to(&self, p: u32) -> Vec<u32> {
        let mut out: Vec<u32> = self.tau[..=p as usize].concat();
        out.sort_unstable();
        out
    }

    /// Checks the three structural properties the induction relies on:
    /// the groups are pairwise disjoint, the groups below s cover exactly
    /// [i'+1 : i] union [i+j-i' : m], and the last group is [m+2 : d+1].
    /// Also checks that the relabeling is strictly increasing.
    pub fn verify(&self) -> Result<()> {
        for w in self.a.windows(2) {
            if w[0] >= w[1] {
                return Err(Error::InvalidParams(format!(
                    "relabeling not strictly increasing: {:?}",
                    self.a
                )));
            }
        }
        let mut seen = std::collections::BTreeSet::new();
        for group in &self.tau {
            for &x in group {
                if !seen.insert(x) {
                    return Err(Error::InvalidParams(format!(
                        "groups overlap at {x}: {:?}",
                        self.tau
                    )));
                }
            }
        }
        let below: std::collections::BTreeSet<u32> = self.tau[..self.s as usize]
            .iter()
            .flatten()
            .copied()
            .collect();
        let expected: std::collections::BTreeSet<u32> = (self.i_prime + 1..=self.i)
            .chain(self.i + self.j - self.i_prime..=self.m)
            .collect();
        if below != expected {
            return Err(Error::InvalidParams(format!(
                "groups below s cover {below:?}, expected {expected:?}"
            )));
        }
        let last: Vec<u32> = (self.m + 2..=self.d + 1).collect();
        if self.tau[self.s as usize] != last {
            return Err(Error::InvalidParams(format!(
                "last group is {:?}, expected {last:?}",
                self.tau[self.s as usize]
            )));
        }
        Ok(())
    }
}

/// Every admissible (m, i, i', j) tuple for a given repair degree.
pub fn admissible_tuples(d: u32) -> Vec<(u32, u32, u32, u32)> {
    let mut out = Vec::new();
    for m in 1..d {
        for i in 0..m {
            for i_prime in 0..=i {
                for j in i_prime + 1..=(m - i + i_prime + 1).min(m) {
                    out.push((m, i, i_prime, j));
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hand_checked_partition_d3() {
        let p = build_tau(3, 1, 0, 0, 1).unwrap();
        assert_eq!((p.s, p.r), (1, 1));
        assert_eq!(p.tau[0], vec![1]);
        assert_eq!(p.tau[1], vec![3, 4]);
    }

    #[test]
    fn hand_checked_partition_d4() {
        let p = build_tau(4, 2, 1, 0, 2).unwrap();
        assert_eq!((p.s, p.r), (1, 1));
        assert_eq!(p.tau[0], vec![1]);
        assert_eq!(p.tau[1], vec![4, 5]);
    }

    #[test]
    fn exhaustive_up_to_d6() {
        let mut count = 0usize;
        for d in 2..=6u32 {
            for (m, i, i_prime, j) in admissible_tuples(d) {
                let p = build_tau(d, m, i, i_prime, j).unwrap();
                p.verify().unwrap();
                assert_eq!((d + 1 - j), p.s * (d - m) + p.r);
                count += 1;
            }
        }
        assert!(count > 50, "swept {count} tuples");
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(build_tau(3, 3, 0, 0, 1).is_err()); // m = d
        assert!(build_tau(3, 1, 1, 0, 1).is_err()); // i = m
        assert!(build_tau(3, 2, 1, 1, 1).is_err()); // j <= i'
        assert!(build_tau(3, 2, 0, 0, 3).is_err()); // j = m + 1 not built
    }
}
