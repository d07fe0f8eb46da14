//! Saturated CSMA throughput on a conflict graph.
//!
//! Every vertex is a transmitter; edges join transmitters that hear each
//! other. In steady state the channel occupies independent set `S` with
//! weight `θ^|S|`, so node `v` transmits a fraction
//!
//! ```text
//! p_v(θ) = θ · Z_{G - N[v]}(θ) / Z_G(θ)
//! ```
//!
//! of the time, where `Z_G` is the independence polynomial. The empty set
//! (idle channel) is one of the states, so `Z_G(θ)` has constant term 1.
//!
//! As `θ → ∞`, `p_v` tends to the share of maximum independent sets that
//! contain `v`. Vertices in no maximum independent set starve.

use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::extend::{is_one_extendable_with, CheckOptions};
use crate::graph::Graph;
use crate::mis::{Budget, PolyEngine};

fn ser_rational<S: Serializer>(q: &BigRational, ser: S) -> std::result::Result<S::Ok, S::Error> {
    ser.serialize_str(&q.to_string())
}

fn ser_rationals<S: Serializer>(qs: &[BigRational], ser: S) -> std::result::Result<S::Ok, S::Error> {
    ser.collect_seq(qs.iter().map(|q| q.to_string()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ThroughputVector {
    #[serde(serialize_with = "ser_rational")]
    pub theta: BigRational,
    #[serde(serialize_with = "ser_rationals")]
    pub p: Vec<BigRational>,
}

/// `lim p_v` as `θ → ∞`, one entry per vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LimitVector {
    #[serde(serialize_with = "ser_rationals")]
    pub limits: Vec<BigRational>,
}

pub fn throughput(g: &Graph, theta: &BigRational) -> Result<ThroughputVector> {
    throughput_with(g, theta, &Budget::unlimited())
}

pub fn throughput_with(g: &Graph, theta: &BigRational, budget: &Budget) -> Result<ThroughputVector> {
    let mut engine = PolyEngine::new(g, budget);
    throughput_engine(&mut engine, g.n(), theta)
}

fn throughput_engine(engine: &mut PolyEngine<'_>, n: usize, theta: &BigRational) -> Result<ThroughputVector> {
    if !theta.is_positive() {
        return Err(Error::InvalidArgument(format!("theta must be positive, got {theta}")));
    }
    let z = engine.polynomial()?.evaluate(theta);
    let mut p = Vec::with_capacity(n);
    for v in 0..n {
        let zv = engine.polynomial_without_closed(v)?.evaluate(theta);
        p.push(theta * zv / &z);
    }
    Ok(ThroughputVector { theta: theta.clone(), p })
}

pub fn throughput_limit(g: &Graph) -> Result<LimitVector> {
    throughput_limit_with(g, &Budget::unlimited())
}

pub fn throughput_limit_with(g: &Graph, budget: &Budget) -> Result<LimitVector> {
    let mut engine = PolyEngine::new(g, budget);
    let p = engine.polynomial()?;
    let alpha = p.degree();
    let total = BigInt::from(p.leading().clone());
    let mut limits = Vec::with_capacity(g.n());
    for v in 0..g.n() {
        let q = engine.polynomial_without_closed(v)?;
        let containing = if q.degree() + 1 == alpha { q.leading().clone() } else { BigUint::zero() };
        limits.push(BigRational::new(BigInt::from(containing), total.clone()));
    }
    Ok(LimitVector { limits })
}

/// CSV table with a header `theta,p_0,...` and one row per θ. Values are
/// rounded half up to `precision` decimals.
pub fn theta_sweep(g: &Graph, thetas: &[BigRational], precision: usize) -> Result<String> {
    theta_sweep_with(g, thetas, precision, &Budget::unlimited())
}

pub fn theta_sweep_with(g: &Graph, thetas: &[BigRational], precision: usize, budget: &Budget) -> Result<String> {
    let mut engine = PolyEngine::new(g, budget);
    let mut out = String::from("theta");
    for v in 0..g.n() {
        out.push_str(&format!(",p_{v}"));
    }
    out.push('\n');
    for theta in thetas {
        let t = throughput_engine(&mut engine, g.n(), theta)?;
        out.push_str(&to_decimal(theta, precision));
        for p in &t.p {
            out.push(',');
            out.push_str(&to_decimal(p, precision));
        }
        out.push('\n');
    }
    Ok(out)
}

/// Vertices whose limit share is 0, i.e. those in no maximum independent set.
pub fn starvation_report(g: &Graph) -> Result<Vec<usize>> {
    starvation_report_with(g, &CheckOptions::default())
}

pub fn starvation_report_with(g: &Graph, opts: &CheckOptions) -> Result<Vec<usize>> {
    Ok(is_one_extendable_with(g, opts)?.uncovered())
}

/// Parses `"20"`, `"5/2"` or `"0.25"` exactly.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::InvalidArgument(format!("not a rational number: {s:?}"));
    if let Some((int, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let neg = int.starts_with('-');
        let int =
            if int.is_empty() || int == "-" { BigInt::zero() } else { BigInt::from_str(int).map_err(|_| bad())? };
        let den = BigInt::from(10u32).pow(frac.len() as u32);
        let mut num = BigInt::from_str(frac).map_err(|_| bad())?;
        if neg {
            num = -num;
        }
        return Ok(BigRational::from_integer(int) + BigRational::new(num, den));
    }
    match s.split_once('/') {
        Some((_, d)) if BigInt::from_str(d).map_or(true, |d| d.is_zero()) => Err(bad()),
        _ => BigRational::from_str(s).map_err(|_| bad()),
    }
}

/// Decimal rendering with exactly `precision` digits after the point,
/// rounding halves away from zero.
pub fn to_decimal(q: &BigRational, precision: usize) -> String {
    let scale = BigInt::from(10u32).pow(precision as u32);
    let scaled = q.abs() * BigRational::from_integer(scale.clone());
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let r = (scaled + half).floor().to_integer();
    let digits = r.to_string();
    let (int, frac) = if precision == 0 {
        (digits, String::new())
    } else if digits.len() > precision {
        let (a, b) = digits.split_at(digits.len() - precision);
        (a.to_string(), b.to_string())
    } else {
        ("0".to_string(), format!("{digits:0>precision$}"))
    };
    let sign = if q.is_negative() && !r.is_zero() { "-" } else { "" };
    if precision == 0 {
        format!("{sign}{int}")
    } else {
        format!("{sign}{int}.{frac}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> BigRational {
        parse_rational(s).unwrap()
    }

    #[test]
    fn parse() {
        assert_eq!(q("5/2"), BigRational::new(5.into(), 2.into()));
        assert_eq!(q("20"), BigRational::from_integer(20.into()));
        assert_eq!(q("0.25"), BigRational::new(1.into(), 4.into()));
        assert_eq!(q("-1.5"), BigRational::new((-3).into(), 2.into()));
        for bad in ["", "x", "1/0", "1.", "1.2.3", "2/"] {
            assert!(parse_rational(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn decimals() {
        assert_eq!(to_decimal(&q("1/3"), 6), "0.333333");
        assert_eq!(to_decimal(&q("2/3"), 6), "0.666667");
        assert_eq!(to_decimal(&q("1/2"), 0), "1");
        assert_eq!(to_decimal(&q("100"), 2), "100.00");
        assert_eq!(to_decimal(&q("1/8"), 2), "0.13");
        assert_eq!(to_decimal(&q("-1/8"), 2), "-0.13");
        assert_eq!(to_decimal(&q("1/1000"), 6), "0.001000");
    }

    #[test]
    fn small_examples() {
        let k2 = Graph::complete(2);
        assert_eq!(throughput(&k2, &q("1")).unwrap().p, vec![q("1/3"), q("1/3")]);
        let k1 = Graph::empty(1);
        assert_eq!(throughput(&k1, &q("7/2")).unwrap().p, vec![q("7/9")]);
        assert!(throughput(&k1, &q("0")).is_err());
        let p4 = throughput_limit(&Graph::path(4)).unwrap().limits;
        assert_eq!(p4, vec![q("2/3"), q("1/3"), q("1/3"), q("2/3")]);
        let p5 = throughput_limit(&Graph::path(5)).unwrap().limits;
        assert_eq!(p5, vec![q("1"), q("0"), q("1"), q("0"), q("1")]);
        assert_eq!(throughput_limit(&Graph::complete(3)).unwrap().limits, vec![q("1/3"); 3]);
    }

    #[test]
    fn sweep_format() {
        let csv = theta_sweep(&Graph::path(2), &[q("1")], 3).unwrap();
        assert_eq!(csv, "theta,p_0,p_1\n1.000,0.333,0.333\n");
    }

    #[test]
    fn starvation() {
        assert_eq!(starvation_report(&Graph::path(5)).unwrap(), vec![1, 3]);
        assert!(starvation_report(&Graph::path(4)).unwrap().is_empty());
        assert!(starvation_report(&Graph::cycle(6)).unwrap().is_empty());
    }

    #[test]
    fn json_shape() {
        let t = throughput(&Graph::complete(2), &q("1")).unwrap();
        assert_eq!(serde_json::to_string(&t).unwrap(), r#"{"theta":"1","p":["1/3","1/3"]}"#);
    }
}
