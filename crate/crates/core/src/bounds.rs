//! Exact-rational tradeoff machinery: repair-degree coefficients, corner
//! points, outer-bound lines, their intersections, and region reports.
//!
//! All quantities are normalized by the total message size, so every value
//! here is an exact `BigRational` and every comparison is an equality or
//! inequality over the rationals. Reports are emitted in a fixed order so
//! repeated runs are byte-identical.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::ratio;

/// T(d, k, l) = sum of (d + 1 - t) for t in [l+1 : k].
///
/// This is the per-unit secure message size of a key-padded
/// minimum-bandwidth code with repair degree `d`, recovery level `k`, and
/// `l` eavesdropped repairs; `T(d, k, 0)` is the plain MBR message size.
pub fn t_coeff(d: u32, k: u32, ell: u32) -> Result<i64> {
    if !(ell <= k && k <= d) {
        return Err(Error::InvalidParams(format!(
            "t_coeff requires 0 <= l <= k <= d, got d={d} k={k} l={ell}"
        )));
    }
    Ok((ell + 1..=k).map(|t| (d + 1 - t) as i64).sum())
}

/// Normalized per-level message weights for a `d`-level system with `ell`
/// eavesdropped repairs: weights on levels [ell+1 : d], nonnegative,
/// summing to one. Zero weights are kept; they contribute zero terms to
/// bound sums but are skipped by code construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MessageProfile {
    d: u32,
    ell: u32,
    weights: BTreeMap<u32, BigRational>,
}

impl MessageProfile {
    pub fn new(d: u32, ell: u32, weights: Vec<(u32, BigRational)>) -> Result<Self> {
        if d == 0 || ell >= d {
            return Err(Error::InvalidParams(format!(
                "profile requires 0 <= l < d, got d={d} l={ell}"
            )));
        }
        let mut map = BTreeMap::new();
        for (j, w) in weights {
            if j <= ell || j > d {
                return Err(Error::InvalidParams(format!(
                    "profile level {j} outside [l+1 : d] = [{} : {d}]",
                    ell + 1
                )));
            }
            if w.is_negative() {
                return Err(Error::InvalidParams(format!(
                    "negative weight on level {j}"
                )));
            }
            if map.insert(j, w).is_some() {
                return Err(Error::InvalidParams(format!("duplicate level {j}")));
            }
        }
        let total: BigRational = map.values().cloned().sum();
        if !total.is_one() {
            return Err(Error::InvalidParams(format!(
                "profile weights sum to {total}, expected 1"
            )));
        }
        Ok(Self {
            d,
            ell,
            weights: map,
        })
    }

    /// Degenerate profile with all weight on one level.
    pub fn single_level(d: u32, ell: u32, k: u32) -> Result<Self> {
        Self::new(d, ell, vec![(k, BigRational::one())])
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn ell(&self) -> u32 {
        self.ell
    }

    pub fn weight(&self, j: u32) -> BigRational {
        self.weights
            .get(&j)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    /// Levels carrying nonzero weight, ascending.
    pub fn active_levels(&self) -> Vec<u32> {
        self.weights
            .iter()
            .filter(|(_, w)| !w.is_zero())
            .map(|(&j, _)| j)
            .collect()
    }

    /// The single active level, if there is exactly one.
    pub fn sole_level(&self) -> Option<u32> {
        match self.active_levels().as_slice() {
            [k] => Some(*k),
            _ => None,
        }
    }

    /// Sum of T(d, j, l)^-1 * weight_j over all levels.
    pub fn weighted_t_inv_sum(&self) -> Result<BigRational> {
        let mut acc = BigRational::zero();
        for j in self.ell + 1..=self.d {
            let w = self.weight(j);
            if w.is_zero() {
                continue;
            }
            let t = t_coeff(self.d, j, self.ell)?;
            acc += w / ratio::int(t);
        }
        Ok(acc)
    }
}

/// A normalized storage/bandwidth pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatePoint {
    pub alpha_bar: BigRational,
    pub beta_bar: BigRational,
}

impl RatePoint {
    pub fn new(alpha_bar: BigRational, beta_bar: BigRational) -> Self {
        Self {
            alpha_bar,
            beta_bar,
        }
    }

    pub fn json(&self) -> Value {
        json!([self.alpha_bar.to_string(), self.beta_bar.to_string()])
    }
}

impl std::fmt::Display for RatePoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {})", self.alpha_bar, self.beta_bar)
    }
}

/// Which outer-bound family a line belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BoundTag {
    B1,
    B2,
    B3,
    B4,
    B5,
    B6,
    B7,
}

impl BoundTag {
    pub const ALL: [BoundTag; 7] = [
        BoundTag::B1,
        BoundTag::B2,
        BoundTag::B3,
        BoundTag::B4,
        BoundTag::B5,
        BoundTag::B6,
        BoundTag::B7,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            BoundTag::B1 => "B1",
            BoundTag::B2 => "B2",
            BoundTag::B3 => "B3",
            BoundTag::B4 => "B4",
            BoundTag::B5 => "B5",
            BoundTag::B6 => "B6",
            BoundTag::B7 => "B7",
        }
    }
}

impl std::fmt::Display for BoundTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for BoundTag {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "B1" => Ok(BoundTag::B1),
            "B2" => Ok(BoundTag::B2),
            "B3" => Ok(BoundTag::B3),
            "B4" => Ok(BoundTag::B4),
            "B5" => Ok(BoundTag::B5),
            "B6" => Ok(BoundTag::B6),
            "B7" => Ok(BoundTag::B7),
            _ => Err(Error::InvalidParams(format!("unknown bound tag '{s}'"))),
        }
    }
}

/// The half-plane `c_alpha * alpha + c_beta * beta >= rhs`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundLine {
    pub c_alpha: BigRational,
    pub c_beta: BigRational,
    pub rhs: BigRational,
    pub tag: BoundTag,
}

impl BoundLine {
    /// Left-hand side evaluated at a point.
    pub fn eval(&self, p: &RatePoint) -> BigRational {
        &self.c_alpha * &p.alpha_bar + &self.c_beta * &p.beta_bar
    }

    pub fn satisfied_by(&self, p: &RatePoint) -> bool {
        self.eval(p) >= self.rhs
    }

    pub fn tight_at(&self, p: &RatePoint) -> bool {
        self.eval(p) == self.rhs
    }

    /// Renders like "alpha + 29 beta >= 7/3" or "beta >= 1/15".
    pub fn inequality_string(&self) -> String {
        let mut terms = Vec::new();
        for (c, name) in [(&self.c_alpha, "alpha"), (&self.c_beta, "beta")] {
            if c.is_zero() {
                continue;
            }
            if c.is_one() {
                terms.push(name.to_string());
            } else {
                terms.push(format!("{c} {name}"));
            }
        }
        format!("{} >= {}", terms.join(" + "), self.rhs)
    }

    pub fn json(&self) -> Value {
        json!({
            "tag": self.tag.as_str(),
            "c_alpha": self.c_alpha.to_string(),
            "c_beta": self.c_beta.to_string(),
            "rhs": self.rhs.to_string(),
            "inequality": self.inequality_string(),
        })
    }
}

impl std::fmt::Display for BoundLine {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{}: {}",
            self.tag.as_str().to_ascii_lowercase(),
            self.inequality_string()
        )
    }
}

/// Constructs one outer-bound line for the given parameters.
///
/// Families B1/B2/B7 apply only with `ell = 0`; B5/B6 require a profile
/// concentrated on a single level. B3/B4 are the general forms.
pub fn bound_line(
    family: BoundTag,
    d: u32,
    ell: u32,
    profile: &MessageProfile,
) -> Result<BoundLine> {
    if profile.d() != d || profile.ell() != ell {
        return Err(Error::InvalidParams(format!(
            "profile is for (d={}, l={}), requested (d={d}, l={ell})",
            profile.d(),
            profile.ell()
        )));
    }
    let needs_zero_ell = matches!(family, BoundTag::B1 | BoundTag::B2 | BoundTag::B7);
    if needs_zero_ell && ell != 0 {
        return Err(Error::InvalidParams(format!(
            "{family} applies only without repair secrecy (l = 0)"
        )));
    }
    if matches!(family, BoundTag::B5 | BoundTag::B6) && profile.sole_level().is_none() {
        return Err(Error::InvalidParams(format!(
            "{family} applies only to a single-level profile"
        )));
    }
    let sum = profile.weighted_t_inv_sum()?;
    let di = d as i64;
    let li = ell as i64;
    let (c_alpha, c_beta, rhs) = match family {
        BoundTag::B1 => (ratio::int(0), ratio::int(1), sum),
        BoundTag::B2 => (
            ratio::int(1),
            ratio::frac(di * (di - 1), 2),
            ratio::frac(di * (di + 1), 2) * sum,
        ),
        BoundTag::B3 | BoundTag::B5 => (ratio::int(0), ratio::int(1), sum),
        BoundTag::B4 | BoundTag::B6 => (
            ratio::int(1),
            ratio::int(di * (di - li) - li),
            ratio::int((di - li) * (di + 1)) * sum,
        ),
        BoundTag::B7 => (
            ratio::int(1),
            ratio::int(di * di),
            ratio::int(di * (di + 1)) * sum,
        ),
    };
    Ok(BoundLine {
        c_alpha,
        c_beta,
        rhs,
        tag: family,
    })
}

/// Intersection of two bound lines taken as equalities.
pub fn intersect_lines(l1: &BoundLine, l2: &BoundLine) -> Result<RatePoint> {
    let det = &l1.c_alpha * &l2.c_beta - &l2.c_alpha * &l1.c_beta;
    if det.is_zero() {
        return Err(Error::InvalidParams(format!(
            "lines {} and {} are parallel",
            l1.tag, l2.tag
        )));
    }
    let alpha = (&l1.rhs * &l2.c_beta - &l2.rhs * &l1.c_beta) / &det;
    let beta = (&l1.c_alpha * &l2.rhs - &l2.c_alpha * &l1.rhs) / &det;
    Ok(RatePoint::new(alpha, beta))
}

/// The minimum-bandwidth corner for a multi-level profile without secrecy.
pub fn mbr_point(profile: &MessageProfile) -> Result<RatePoint> {
    if profile.ell() != 0 {
        return Err(Error::InvalidParams(
            "mbr_point is the l = 0 corner; use separate_coding_point for l > 0".into(),
        ));
    }
    let sum = profile.weighted_t_inv_sum()?;
    Ok(RatePoint::new(ratio::int(profile.d() as i64) * &sum, sum))
}

/// The secure minimum-bandwidth corner (d/T(d,k,l), 1/T(d,k,l)).
pub fn srk_point(d: u32, ell: u32, k: u32) -> Result<RatePoint> {
    if ell >= k {
        return Err(Error::SecrecyImpossible);
    }
    let t = t_coeff(d, k, ell)?;
    Ok(RatePoint::new(ratio::frac(d as i64, t), ratio::frac(1, t)))
}

/// The point achieved by encoding each level with its own secure code at
/// the corner rate and superimposing: componentwise weighted sum of the
/// per-level corners.
pub fn separate_coding_point(d: u32, ell: u32, profile: &MessageProfile) -> Result<RatePoint> {
    if profile.d() != d || profile.ell() != ell {
        return Err(Error::InvalidParams("profile/parameter mismatch".into()));
    }
    let mut alpha = BigRational::zero();
    let mut beta = BigRational::zero();
    for j in ell + 1..=d {
        let w = profile.weight(j);
        if w.is_zero() {
            continue;
        }
        let corner = srk_point(d, ell, j)?;
        alpha += &w * corner.alpha_bar;
        beta += w * corner.beta_bar;
    }
    Ok(RatePoint::new(alpha, beta))
}

/// Feasibility verdict for the separate-coding point against the emitted
/// bound lines.
#[derive(Debug, Clone)]
pub struct Verdict {
    pub achieved_point_feasible: bool,
    pub tight: Vec<BoundTag>,
    pub note: String,
}

/// Everything one tradeoff region evaluation produces.
#[derive(Debug, Clone)]
pub struct RegionReport {
    pub n: u32,
    pub d: u32,
    pub ell: u32,
    pub profile: MessageProfile,
    pub lines: Vec<BoundLine>,
    pub intersections: Vec<(BoundTag, BoundTag, RatePoint)>,
    pub mbr_point: RatePoint,
    pub separate_coding_point: RatePoint,
    pub verdict: Verdict,
    pub annotations: BTreeMap<String, String>,
}

/// Evaluates the outer bounds and the separate-coding achievable point for
/// one parameter set, and reports whether they meet.
///
/// Emitted lines: B1/B2/B7 when `ell = 0`; B5/B6 for a single-level secure
/// profile; B3/B4 otherwise. Lines are ordered by tag and intersections
/// lexicographically, so the report is byte-stable.
pub fn region_report(n: u32, d: u32, ell: u32, profile: &MessageProfile) -> Result<RegionReport> {
    if d >= n {
        return Err(Error::InvalidParams(format!(
            "need repair degree below node count, got n={n} d={d}"
        )));
    }
    let families: Vec<BoundTag> = if ell == 0 {
        vec![BoundTag::B1, BoundTag::B2, BoundTag::B7]
    } else if profile.sole_level().is_some() {
        vec![BoundTag::B5, BoundTag::B6]
    } else {
        vec![BoundTag::B3, BoundTag::B4]
    };
    let mut lines = families
        .iter()
        .map(|&f| bound_line(f, d, ell, profile))
        .collect::<Result<Vec<_>>>()?;
    lines.sort_by_key(|l| l.tag);

    let mut intersections = Vec::new();
    for a in 0..lines.len() {
        for b in a + 1..lines.len() {
            if let Ok(p) = intersect_lines(&lines[a], &lines[b]) {
                intersections.push((lines[a].tag, lines[b].tag, p));
            }
        }
    }

    let sum = profile.weighted_t_inv_sum()?;
    let mbr = RatePoint::new(ratio::int(d as i64) * &sum, sum);
    let achieved = separate_coding_point(d, ell, profile)?;

    let feasible = lines.iter().all(|l| l.satisfied_by(&achieved));
    let tight: Vec<BoundTag> = lines
        .iter()
        .filter(|l| l.tight_at(&achieved))
        .map(|l| l.tag)
        .collect();
    let note = if ell == 0 {
        format!(
            "b2 and b7 bound the same corner with distinct bandwidth slopes ({} vs {})",
            ratio::frac((d as i64) * (d as i64 - 1), 2),
            (d as i64) * (d as i64)
        )
    } else {
        "separate coding meets the horizontal and sloped bounds at their common corner".into()
    };
    let verdict = Verdict {
        achieved_point_feasible: feasible,
        tight,
        note,
    };

    let mut annotations = BTreeMap::new();
    if is_fig1_inputs(n, d, ell, profile) {
        // Known minimum-storage corner for this configuration, quoted from
        // prior analyses of the same example; reported, never computed.
        annotations.insert("msr_point".to_string(), "(7/18, 11/36)".to_string());
    }

    Ok(RegionReport {
        n,
        d,
        ell,
        profile: profile.clone(),
        lines,
        intersections,
        mbr_point: mbr,
        separate_coding_point: achieved,
        verdict,
        annotations,
    })
}

fn is_fig1_inputs(n: u32, d: u32, ell: u32, profile: &MessageProfile) -> bool {
    n == 4
        && d == 3
        && ell == 0
        && profile.weight(1).is_zero()
        && profile.weight(2) == ratio::frac(1, 3)
        && profile.weight(3) == ratio::frac(2, 3)
}

impl RegionReport {
    pub fn to_json(&self) -> Value {
        let profile: Vec<Value> = (self.ell + 1..=self.d)
            .map(|j| json!([j, self.profile.weight(j).to_string()]))
            .collect();
        let mut obj = json!({
            "params": { "n": self.n, "d": self.d, "ell": self.ell, "profile": profile },
            "lines": self.lines.iter().map(BoundLine::json).collect::<Vec<_>>(),
            "intersections": self
                .intersections
                .iter()
                .map(|(a, b, p)| json!({ "pair": [a.as_str(), b.as_str()], "point": p.json() }))
                .collect::<Vec<_>>(),
            "mbr_point": self.mbr_point.json(),
            "separate_coding_point": self.separate_coding_point.json(),
            "verdict": {
                "achieved_point_feasible": self.verdict.achieved_point_feasible,
                "tight": self.verdict.tight.iter().map(|t| t.as_str()).collect::<Vec<_>>(),
                "note": self.verdict.note,
            },
        });
        if !self.annotations.is_empty() {
            obj["annotations"] = json!(self.annotations);
        }
        obj
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "region n={} d={} l={}\n",
            self.n, self.d, self.ell
        ));
        for line in &self.lines {
            out.push_str(&format!(
                "{}: {}\n",
                line.tag.as_str().to_ascii_lowercase(),
                line.inequality_string()
            ));
        }
        for (a, b, p) in &self.intersections {
            out.push_str(&format!(
                "intersection {} ^ {}: {}\n",
                a.as_str().to_ascii_lowercase(),
                b.as_str().to_ascii_lowercase(),
                p
            ));
        }
        out.push_str(&format!("mbr point: {}\n", self.mbr_point));
        out.push_str(&format!(
            "separate coding point: {}\n",
            self.separate_coding_point
        ));
        out.push_str(&format!(
            "verdict: feasible={} tight=[{}] {}\n",
            self.verdict.achieved_point_feasible,
            self.verdict
                .tight
                .iter()
                .map(|t| t.as_str().to_ascii_lowercase())
                .collect::<Vec<_>>()
                .join(","),
            self.verdict.note
        ));
        for (k, v) in &self.annotations {
            out.push_str(&format!("annotation {k}: {v}\n"));
        }
        out
    }

    /// Polyline samples along each bound line plus the two corner points,
    /// for plotting. Decimal columns are fixed-precision renderings of the
    /// exact values carried alongside them.
    pub fn render_csv(&self) -> String {
        let mut out = String::from("tag,alpha,beta,alpha_exact,beta_exact\n");
        let alpha_max = &self.mbr_point.alpha_bar * ratio::int(2);
        let steps = 16i64;
        for line in &self.lines {
            for s in 0..=steps {
                let alpha = &alpha_max * ratio::frac(s, steps);
                let beta = if line.c_alpha.is_zero() {
                    // horizontal: beta = rhs / c_beta
                    &line.rhs / &line.c_beta
                } else {
                    (&line.rhs - &line.c_alpha * &alpha) / &line.c_beta
                };
                if beta.is_negative() {
                    continue;
                }
                out.push_str(&format!(
                    "{},{},{},{},{}\n",
                    line.tag.as_str().to_ascii_lowercase(),
                    ratio::decimal(&alpha, 9),
                    ratio::decimal(&beta, 9),
                    alpha,
                    beta
                ));
            }
        }
        for (name, p) in [
            ("mbr_point", &self.mbr_point),
            ("separate_coding_point", &self.separate_coding_point),
        ] {
            out.push_str(&format!(
                "{},{},{},{},{}\n",
                name,
                ratio::decimal(&p.alpha_bar, 9),
                ratio::decimal(&p.beta_bar, 9),
                p.alpha_bar,
                p.beta_bar
            ));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratio::{frac, int};

    fn fig1_profile() -> MessageProfile {
        MessageProfile::new(3, 0, vec![(1, int(0)), (2, frac(1, 3)), (3, frac(2, 3))]).unwrap()
    }

    #[test]
    fn t_coeff_values() {
        assert_eq!(t_coeff(6, 6, 1).unwrap(), 15);
        assert_eq!(t_coeff(3, 3, 0).unwrap(), 6);
        assert_eq!(t_coeff(3, 2, 0).unwrap(), 5);
        for d in 0..=8 {
            for l in 0..=d {
                assert_eq!(t_coeff(d, l, l).unwrap(), 0, "empty sum at k = l");
            }
        }
        assert!(t_coeff(3, 4, 0).is_err());
        assert!(t_coeff(3, 1, 2).is_err());
    }

    #[test]
    fn t_coeff_closed_form() {
        // T(d,k,l) = (k-l)(d+1) - (k(k+1) - l(l+1))/2, checked against the sum.
        for d in 0i64..=12 {
            for k in 0..=d {
                for l in 0..=k {
                    let closed = (k - l) * (d + 1) - (k * (k + 1) - l * (l + 1)) / 2;
                    assert_eq!(t_coeff(d as u32, k as u32, l as u32).unwrap(), closed);
                }
            }
        }
    }

    #[test]
    fn t_coeff_telescope() {
        // T(d,m,l) + (d - m) = T(d,m+1,l), the step used by the corollaries.
        for d in 1u32..=12 {
            for l in 0..d {
                for m in l..d {
                    assert_eq!(
                        t_coeff(d, m, l).unwrap() + (d - m) as i64,
                        t_coeff(d, m + 1, l).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn fig1_bound_lines() {
        let p = fig1_profile();
        let b1 = bound_line(BoundTag::B1, 3, 0, &p).unwrap();
        let b2 = bound_line(BoundTag::B2, 3, 0, &p).unwrap();
        let b7 = bound_line(BoundTag::B7, 3, 0, &p).unwrap();
        assert_eq!(b1.inequality_string(), "beta >= 8/45");
        assert_eq!(b2.inequality_string(), "alpha + 3 beta >= 16/15");
        assert_eq!(b7.inequality_string(), "alpha + 9 beta >= 32/15");
        let corner = intersect_lines(&b1, &b2).unwrap();
        assert_eq!(corner, RatePoint::new(frac(8, 15), frac(8, 45)));
    }

    #[test]
    fn fig2_bound_lines() {
        let p = MessageProfile::single_level(6, 1, 6).unwrap();
        let b5 = bound_line(BoundTag::B5, 6, 1, &p).unwrap();
        let b6 = bound_line(BoundTag::B6, 6, 1, &p).unwrap();
        assert_eq!(b5.inequality_string(), "beta >= 1/15");
        assert_eq!(b6.inequality_string(), "alpha + 29 beta >= 7/3");
        let corner = intersect_lines(&b5, &b6).unwrap();
        assert_eq!(corner, RatePoint::new(frac(2, 5), frac(1, 15)));
        assert_eq!(corner, srk_point(6, 1, 6).unwrap());
    }

    #[test]
    fn mbr_point_values() {
        assert_eq!(
            mbr_point(&fig1_profile()).unwrap(),
            RatePoint::new(frac(8, 15), frac(8, 45))
        );
        let single = MessageProfile::single_level(3, 0, 1).unwrap();
        assert_eq!(
            mbr_point(&single).unwrap(),
            RatePoint::new(int(1), frac(1, 3))
        );
        // Degenerate single-level profile reduces to the plain corner.
        let k2 = MessageProfile::single_level(4, 0, 2).unwrap();
        assert_eq!(mbr_point(&k2).unwrap(), srk_point(4, 0, 2).unwrap());
    }

    #[test]
    fn srk_point_values() {
        assert_eq!(
            srk_point(6, 1, 6).unwrap(),
            RatePoint::new(frac(2, 5), frac(1, 15))
        );
        assert_eq!(srk_point(2, 1, 2).unwrap(), RatePoint::new(int(2), int(1)));
        assert!(matches!(srk_point(3, 2, 2), Err(Error::SecrecyImpossible)));
    }

    #[test]
    fn b4_at_zero_ell_equals_b7() {
        let p = fig1_profile();
        let b4 = bound_line(BoundTag::B4, 3, 0, &p).unwrap();
        let b7 = bound_line(BoundTag::B7, 3, 0, &p).unwrap();
        assert_eq!(b4.c_alpha, b7.c_alpha);
        assert_eq!(b4.c_beta, b7.c_beta);
        assert_eq!(b4.rhs, b7.rhs);
    }

    #[test]
    fn b3_at_zero_ell_equals_b1() {
        let p = fig1_profile();
        let b3 = bound_line(BoundTag::B3, 3, 0, &p).unwrap();
        let b1 = bound_line(BoundTag::B1, 3, 0, &p).unwrap();
        assert_eq!(
            (b3.c_alpha, b3.c_beta, b3.rhs),
            (b1.c_alpha, b1.c_beta, b1.rhs)
        );
    }

    #[test]
    fn separate_coding_matches_hand_superposition() {
        // d=3, l=1, equal weight on levels 2 and 3:
        // corners (3/2, 1/2) and (1, 1/3) superpose to (5/4, 5/12).
        let p = MessageProfile::new(3, 1, vec![(2, frac(1, 2)), (3, frac(1, 2))]).unwrap();
        let got = separate_coding_point(3, 1, &p).unwrap();
        assert_eq!(got, RatePoint::new(frac(5, 4), frac(5, 12)));
    }

    #[test]
    fn separate_coding_single_level_is_corner() {
        let p = MessageProfile::single_level(5, 2, 4).unwrap();
        assert_eq!(
            separate_coding_point(5, 2, &p).unwrap(),
            srk_point(5, 2, 4).unwrap()
        );
    }

    #[test]
    fn separate_coding_equals_b3_b4_intersection() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(99);
        for _ in 0..50 {
            let d = rng.gen_range(1..=8u32);
            let ell = rng.gen_range(0..d);
            let mut weights = Vec::new();
            let mut parts: Vec<i64> = (ell + 1..=d).map(|_| rng.gen_range(0..5)).collect();
            if parts.iter().all(|&p| p == 0) {
                parts[0] = 1;
            }
            let total: i64 = parts.iter().sum();
            for (idx, j) in (ell + 1..=d).enumerate() {
                weights.push((j, frac(parts[idx], total)));
            }
            let profile = MessageProfile::new(d, ell, weights).unwrap();
            let b3 = bound_line(BoundTag::B3, d, ell, &profile).unwrap();
            let b4 = bound_line(BoundTag::B4, d, ell, &profile).unwrap();
            let corner = intersect_lines(&b3, &b4).unwrap();
            let achieved = separate_coding_point(d, ell, &profile).unwrap();
            assert_eq!(corner, achieved, "d={d} l={ell}");
        }
    }

    #[test]
    fn b7_implied_by_b1_and_b2_on_grid() {
        // Wherever B1 and B2 hold with nonnegative coordinates, B7 holds too.
        let p = fig1_profile();
        let b1 = bound_line(BoundTag::B1, 3, 0, &p).unwrap();
        let b2 = bound_line(BoundTag::B2, 3, 0, &p).unwrap();
        let b7 = bound_line(BoundTag::B7, 3, 0, &p).unwrap();
        for na in 0..=40i64 {
            for nb in 0..=40i64 {
                let pt = RatePoint::new(frac(na, 10), frac(nb, 30));
                if b1.satisfied_by(&pt) && b2.satisfied_by(&pt) {
                    assert!(b7.satisfied_by(&pt), "point {pt}");
                }
            }
        }
    }

    #[test]
    fn region_report_fig1() {
        let p = fig1_profile();
        let r = region_report(4, 3, 0, &p).unwrap();
        let tags: Vec<_> = r.lines.iter().map(|l| l.tag).collect();
        assert_eq!(tags, vec![BoundTag::B1, BoundTag::B2, BoundTag::B7]);
        assert_eq!(r.mbr_point, RatePoint::new(frac(8, 15), frac(8, 45)));
        assert_eq!(r.separate_coding_point, r.mbr_point);
        assert!(r.verdict.achieved_point_feasible);
        assert_eq!(
            r.verdict.tight,
            vec![BoundTag::B1, BoundTag::B2, BoundTag::B7]
        );
        assert_eq!(r.annotations.get("msr_point").unwrap(), "(7/18, 11/36)");
        let js = r.to_json();
        assert_eq!(js["mbr_point"], json!(["8/15", "8/45"]));
    }

    #[test]
    fn region_report_fig2() {
        let p = MessageProfile::single_level(6, 1, 6).unwrap();
        let r = region_report(7, 6, 1, &p).unwrap();
        let tags: Vec<_> = r.lines.iter().map(|l| l.tag).collect();
        assert_eq!(tags, vec![BoundTag::B5, BoundTag::B6]);
        assert_eq!(r.mbr_point, RatePoint::new(frac(2, 5), frac(1, 15)));
        assert!(r.annotations.is_empty());
    }

    #[test]
    fn region_report_degenerate_top_level() {
        let p = MessageProfile::single_level(4, 0, 4).unwrap();
        let r = region_report(5, 4, 0, &p).unwrap();
        let t = t_coeff(4, 4, 0).unwrap();
        assert_eq!(r.mbr_point, RatePoint::new(frac(4, t), frac(1, t)));
    }

    #[test]
    fn report_is_byte_stable() {
        let p = fig1_profile();
        let a = region_report(4, 3, 0, &p).unwrap();
        let b = region_report(4, 3, 0, &p).unwrap();
        assert_eq!(a.render_text(), b.render_text());
        assert_eq!(a.to_json().to_string(), b.to_json().to_string());
        assert_eq!(a.render_csv(), b.render_csv());
    }

    #[test]
    fn profile_validation() {
        assert!(MessageProfile::new(3, 0, vec![(1, frac(1, 2))]).is_err()); // sum != 1
        assert!(MessageProfile::new(3, 1, vec![(1, int(1))]).is_err()); // level <= l
        assert!(MessageProfile::new(3, 0, vec![(4, int(1))]).is_err()); // level > d
        assert!(MessageProfile::new(3, 0, vec![(2, frac(-1, 2)), (3, frac(3, 2))]).is_err());
    }

    #[test]
    fn parallel_lines_error() {
        let p = fig1_profile();
        let b1 = bound_line(BoundTag::B1, 3, 0, &p).unwrap();
        assert!(intersect_lines(&b1, &b1.clone()).is_err());
    }

    #[test]
    fn bound_line_family_mismatches() {
        // Zero-ell families reject secure profiles and vice versa.
        let secure = MessageProfile::new(3, 1, vec![(2, frac(1, 2)), (3, frac(1, 2))]).unwrap();
        assert!(bound_line(BoundTag::B1, 3, 1, &secure).is_err());
        assert!(bound_line(BoundTag::B2, 3, 1, &secure).is_err());
        assert!(bound_line(BoundTag::B7, 3, 1, &secure).is_err());
        // Single-level families reject multi-level profiles.
        assert!(bound_line(BoundTag::B5, 3, 1, &secure).is_err());
        assert!(bound_line(BoundTag::B6, 3, 1, &secure).is_err());
        // Profile parameters must match the requested parameters.
        assert!(bound_line(BoundTag::B3, 4, 1, &secure).is_err());
        assert!(bound_line(BoundTag::B3, 3, 2, &secure).is_err());
    }
}
