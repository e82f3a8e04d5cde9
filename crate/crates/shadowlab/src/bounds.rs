//! Degree-regime shadow-ratio lower bounds: given (k, d), every applicable
//! bound with provenance, and the best of them under exact comparison.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::kknum::{
    binomial, default_eps, invert_binomial, long_interval_threshold, RealBinomialQuery,
};
use crate::ratio::Ratio;

/// Which bound produced a value. Ties in `best_bound` are broken by this
/// order: low-degree < long-interval < short-interval < lovasz < graph.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Regime {
    LowDegree,
    LongInterval { t: u32 },
    ShortInterval { t: u32 },
    Lovasz,
    Graph,
}

impl Regime {
    fn tie_rank(&self) -> u32 {
        match self {
            Regime::LowDegree => 0,
            Regime::LongInterval { .. } => 1,
            Regime::ShortInterval { .. } => 2,
            Regime::Lovasz => 3,
            Regime::Graph => 4,
        }
    }
}

impl std::fmt::Display for Regime {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Regime::LowDegree => write!(f, "low-degree"),
            Regime::LongInterval { t } => write!(f, "long-interval(t={t})"),
            Regime::ShortInterval { t } => write!(f, "short-interval(t={t})"),
            Regime::Lovasz => write!(f, "lovasz"),
            Regime::Graph => write!(f, "graph"),
        }
    }
}

impl Serialize for Regime {
    fn serialize<S>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error>
    where
        S: serde::Serializer,
    {
        serializer.serialize_str(&self.to_string())
    }
}

/// One valid lower bound on the shadow ratio for (k, d).
#[derive(Clone, Debug, Serialize)]
pub struct BoundEntry {
    pub regime: Regime,
    pub value: Ratio,
    pub theorem: String,
    /// Bisection certificate when the bound comes from binomial inversion.
    #[serde(skip)]
    pub certificate: Option<RealBinomialQuery>,
}

/// Every applicable bound for (k, d) plus the best one.
#[derive(Clone, Debug, Serialize)]
pub struct BoundReport {
    pub k: u32,
    pub d: Ratio,
    pub bounds: Vec<BoundEntry>,
    pub best: BoundEntry,
}

/// Graphs: shadow ratio >= 2/d for any degree bound d >= 1.
pub fn bound_graph(d: &Ratio) -> Result<Ratio> {
    if d < &Ratio::one() {
        return Err(Error::InvalidArgument(format!("graph bound requires d >= 1, got {d}")));
    }
    Ok(&Ratio::from(2u64) / d)
}

fn check_low_degree_range(k: u32, d: &Ratio) -> Result<()> {
    if d < &Ratio::one() || d >= &Ratio::from(k as u64) {
        return Err(Error::InvalidArgument(format!(
            "low-degree regime requires 1 <= d < k, got d = {d}, k = {k}"
        )));
    }
    Ok(())
}

/// Low-degree shadow-size bound: with d' = floor(d) and m = q d' + r,
/// |shadow| >= mk - q C(d',2) - C(r,2).
pub fn bound_low_degree(k: u32, d: &Ratio, m: u64) -> Result<u64> {
    check_low_degree_range(k, d)?;
    let d_int: u64 = d.floor().try_into().expect("1 <= d < k fits u64");
    let (q, r) = (m / d_int, m % d_int);
    Ok(m * k as u64 - q * binomial(d_int, 2) - binomial(r, 2))
}

/// Low-degree ratio bound: k - (d-1)/2.
pub fn bound_low_degree_ratio(k: u32, d: &Ratio) -> Result<Ratio> {
    check_low_degree_range(k, d)?;
    Ok(Ratio::from(k as u64) - (d - &Ratio::one()) * Ratio::new(1, 2))
}

/// General bound via binomial inversion: with C(x, k-1) >= d the ratio is at
/// least k/(x-k+2). Published in the certified form k/(x_hat+eps-k+2), which
/// is unconditionally valid for the bisection bracket.
pub fn bound_lovasz(k: u32, d: &Ratio, eps: &Ratio) -> Result<(Ratio, RealBinomialQuery)> {
    if k < 3 || d < &Ratio::one() {
        return Err(Error::InvalidArgument(format!(
            "lovasz regime requires k >= 3 and d >= 1, got k = {k}, d = {d}"
        )));
    }
    let m: u64 = d.ceil().try_into().map_err(|_| {
        Error::InvalidArgument(format!("degree bound {d} too large"))
    })?;
    let query = invert_binomial(m, k - 1, eps)?;
    let denom = &(&query.x + &query.eps) - &Ratio::from_integer(k as i64 - 2);
    Ok((&Ratio::from(k as u64) / &denom, query))
}

/// Clique-regime window: the threshold D(k, t) up to which the clique on t+1
/// vertices stays extremal, with the bound k/(t-k+2).
pub fn bound_long_interval(k: u32, t: u32) -> Result<(u64, Ratio)> {
    if k < 3 || t < k {
        return Err(Error::InvalidArgument(format!(
            "long-interval regime requires t >= k >= 3, got k = {k}, t = {t}"
        )));
    }
    let threshold = long_interval_threshold(t as u64, k - 1)?;
    Ok((threshold, Ratio::new(k as u64, (t - k + 2) as u64)))
}

/// Window just below the max degree of the clique on t+2 vertices:
/// C(t+1,k-1) - ((k-2)/(k-1))(t-k+3) <= d < C(t+1,k-1), with the bound
/// k C(t+1,k-2) / ((k-1) d).
pub fn bound_short_interval(k: u32, t: u32, d: &Ratio) -> Result<Ratio> {
    if k < 3 || t < k {
        return Err(Error::InvalidArgument(format!(
            "short-interval regime requires t >= k >= 3, got k = {k}, t = {t}"
        )));
    }
    let (k64, t64) = (k as u64, t as u64);
    let upper = Ratio::from(binomial(t64 + 1, k64 - 1));
    let lower = &upper - &(Ratio::new(k64 - 2, k64 - 1) * Ratio::from(t64 - k64 + 3));
    if d < &lower || d >= &upper {
        return Err(Error::ShortIntervalHypothesis(format!(
            "need {lower} <= d < {upper}, got d = {d} (k = {k}, t = {t})"
        )));
    }
    let value = &Ratio::from(k64 * binomial(t64 + 1, k64 - 2)) / &(Ratio::from(k64 - 1) * d.clone());
    // the equivalent closed form must agree for integer d
    if d.is_integer() {
        let d_int: u64 = d.floor().try_into().expect("window d fits u64");
        let denom = Ratio::from(binomial(t64 + 2, k64))
            - Ratio::new(t64 + 2, k64)
                * Ratio::from(binomial(t64 + 1, k64 - 1) - d_int);
        if denom.is_positive() {
            let alt = &Ratio::from(binomial(t64 + 2, k64 - 1)) / &denom;
            assert_eq!(value, alt, "short-interval closed forms disagree");
        }
    }
    Ok(value)
}

/// Evaluates every regime whose precondition holds for (k, d) and returns
/// all of them with the maximum flagged. Requires k >= 2 and d >= 1.
pub fn best_bound(k: u32, d: &Ratio) -> Result<BoundReport> {
    if k < 2 || d < &Ratio::one() {
        return Err(Error::InvalidArgument(format!(
            "best_bound requires k >= 2 and d >= 1, got k = {k}, d = {d}"
        )));
    }
    let mut bounds = Vec::new();

    if k == 2 {
        bounds.push(BoundEntry {
            regime: Regime::Graph,
            value: bound_graph(d)?,
            theorem: "prop1.1".into(),
            certificate: None,
        });
    }

    if d < &Ratio::from(k as u64) {
        bounds.push(BoundEntry {
            regime: Regime::LowDegree,
            value: bound_low_degree_ratio(k, d)?,
            theorem: "cor1.3".into(),
            certificate: None,
        });
    }

    if k >= 3 {
        let (value, certificate) = bound_lovasz(k, d, &default_eps())?;
        bounds.push(BoundEntry {
            regime: Regime::Lovasz,
            value,
            theorem: "thm1.4".into(),
            certificate: Some(certificate),
        });

        // windows are monotone in t; a finite scan up to the first t with
        // C(t, k-1) > d (plus one) covers every applicable regime
        let mut t_max = k;
        while &Ratio::from(binomial(t_max as u64, k as u64 - 1)) <= d {
            t_max += 1;
        }
        for t in k..=t_max + 1 {
            if let Ok((threshold, value)) = bound_long_interval(k, t) {
                if d <= &Ratio::from(threshold) {
                    bounds.push(BoundEntry {
                        regime: Regime::LongInterval { t },
                        value,
                        theorem: "thm1.5".into(),
                        certificate: None,
                    });
                }
            }
            if let Ok(value) = bound_short_interval(k, t, d) {
                bounds.push(BoundEntry {
                    regime: Regime::ShortInterval { t },
                    value,
                    theorem: "thm1.7".into(),
                    certificate: None,
                });
            }
        }
    }

    let best = bounds
        .iter()
        .max_by(|a, b| {
            a.value
                .cmp(&b.value)
                .then(b.regime.tie_rank().cmp(&a.regime.tie_rank()))
        })
        .expect("at least one regime applies")
        .clone();
    Ok(BoundReport { k, d: d.clone(), bounds, best })
}
