//! The closed-form rate upper bounds, evaluated exactly.
//!
//! Rational formulas are computed in exact rational arithmetic; the
//! entropy- and logarithm-based bounds are computed as dyadic rationals with
//! [`PRECISION_BITS`] fractional bits (error below 2^-60), so that sweep
//! tables and integer crossing points are never corrupted by floating-point
//! noise.

use crate::{Error, Result};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, ToPrimitive, Zero};
use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

/// Fractional bits carried by the dyadic approximations of log2 and the
/// binary entropy function. The computation keeps 64 guard bits, so the
/// values are accurate to well below 2^-60.
pub const PRECISION_BITS: u32 = 64;
const GUARD_BITS: u32 = 64;

/// Parameters a bound may consume. Each registry entry declares which of
/// them it needs; evaluating with a required field absent is a
/// missing-parameter error.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct BoundParams {
    pub r: Option<usize>,
    pub t: Option<usize>,
    pub n: Option<usize>,
}

impl BoundParams {
    pub fn rt(r: usize, t: usize) -> Self {
        BoundParams {
            r: Some(r),
            t: Some(t),
            n: None,
        }
    }

    fn need_r(&self) -> Result<usize> {
        let r = self.r.ok_or(Error::MissingParameter("r"))?;
        if r < 1 {
            return Err(Error::InvalidParameter("r must be >= 1".into()));
        }
        Ok(r)
    }

    fn need_t(&self) -> Result<usize> {
        let t = self.t.ok_or(Error::MissingParameter("t"))?;
        if t < 1 {
            return Err(Error::InvalidParameter("t must be >= 1".into()));
        }
        Ok(t)
    }

    fn need_n(&self) -> Result<usize> {
        let n = self.n.ok_or(Error::MissingParameter("n"))?;
        if n < 1 {
            return Err(Error::InvalidParameter("n must be >= 1".into()));
        }
        if let Some(r) = self.r {
            if n < r + 1 {
                return Err(Error::InvalidParameter(format!(
                    "n = {n} must be at least r + 1 = {}",
                    r + 1
                )));
            }
        }
        Ok(n)
    }
}

/// Either an exact rational or a dyadic approximation carrying
/// [`PRECISION_BITS`] fractional bits. Numeric comparisons go through
/// [`Value::rational`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Exact(BigRational),
    Approx(BigRational),
}

impl Value {
    pub fn rational(&self) -> &BigRational {
        match self {
            Value::Exact(v) | Value::Approx(v) => v,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Value::Exact(_))
    }

    pub fn to_f64(&self) -> f64 {
        self.rational().to_f64().unwrap_or(f64::NAN)
    }

    /// Decimal rendering with the given number of significant digits.
    pub fn to_decimal(&self, significant: usize) -> String {
        format_decimal(self.rational(), significant)
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Exact(v) => write!(f, "{}/{}", v.numer(), v.denom()),
            Value::Approx(_) => f.write_str(&self.to_decimal(12)),
        }
    }
}

fn format_decimal(v: &BigRational, significant: usize) -> String {
    if v.is_zero() {
        return "0".to_string();
    }
    let negative = v.is_negative();
    let v = v.abs();
    // Scale into [10^(s-1), 10^s) and round.
    let mut exponent: i64 = 0;
    let one = BigRational::one();
    let ten = BigRational::from_integer(BigInt::from(10));
    let mut scaled = v.clone();
    while scaled >= ten {
        scaled /= &ten;
        exponent += 1;
    }
    while scaled < one {
        scaled *= &ten;
        exponent -= 1;
    }
    let shift = BigInt::from(10u32).pow(significant as u32 - 1);
    let digits = (scaled * BigRational::from_integer(shift))
        .round()
        .to_integer();
    let mut ds = digits.to_string();
    if ds.len() > significant {
        // Rounding overflowed to the next power of ten.
        ds.truncate(significant);
        exponent += 1;
    }
    let mut out = String::new();
    if negative {
        out.push('-');
    }
    if exponent >= 0 && (exponent as usize) < significant {
        let point = exponent as usize + 1;
        out.push_str(&ds[..point]);
        let frac = ds[point..].trim_end_matches('0');
        if !frac.is_empty() {
            out.push('.');
            out.push_str(frac);
        }
    } else if (-9..0).contains(&exponent) {
        out.push_str("0.");
        for _ in 0..(-exponent - 1) {
            out.push('0');
        }
        out.push_str(ds.trim_end_matches('0'));
    } else {
        out.push_str(&ds[..1]);
        let frac = ds[1..].trim_end_matches('0');
        if !frac.is_empty() {
            out.push('.');
            out.push_str(frac);
        }
        out.push_str(&format!("e{exponent}"));
    }
    out
}

/// floor(log2(x)) for a positive rational.
fn floor_log2(x: &BigRational) -> i64 {
    assert!(x.is_positive());
    let num_bits = x.numer().bits() as i64;
    let den_bits = x.denom().bits() as i64;
    let mut e = num_bits - den_bits;
    let two = BigRational::from_integer(BigInt::from(2));
    while pow2(e) > *x {
        e -= 1;
    }
    while pow2(e) * &two <= *x {
        e += 1;
    }
    e
}

fn pow2(e: i64) -> BigRational {
    if e >= 0 {
        BigRational::from_integer(BigInt::one() << e as usize)
    } else {
        BigRational::new(BigInt::one(), BigInt::one() << (-e) as usize)
    }
}

/// log2 of a positive rational as a dyadic rational with PRECISION_BITS
/// fractional bits. Exact (and marked so by the caller) when x is a power of
/// two. Uses the classic bit-by-bit squaring recurrence in fixed point with
/// GUARD_BITS of slack.
fn log2_dyadic(x: &BigRational) -> BigRational {
    let e = floor_log2(x);
    let y = x / pow2(e);
    if y.is_one() {
        return BigRational::from_integer(BigInt::from(e));
    }
    let work = PRECISION_BITS + GUARD_BITS;
    // Fixed-point mantissa of y in [1, 2): floor(y * 2^work).
    let mut mantissa: BigInt = (y.numer() << work as usize) / y.denom();
    let one_fixed: BigInt = BigInt::one() << work as usize;
    let two_fixed: BigInt = &one_fixed << 1;
    let mut frac = BigInt::zero();
    for _ in 0..PRECISION_BITS {
        mantissa = (&mantissa * &mantissa) >> work as usize;
        frac <<= 1;
        if mantissa >= two_fixed {
            frac += 1;
            mantissa >>= 1;
        }
    }
    BigRational::from_integer(BigInt::from(e))
        + BigRational::new(frac, BigInt::one() << PRECISION_BITS as usize)
}

/// True when the rational is an exact power of two.
fn is_power_of_two(x: &BigRational) -> bool {
    let num_pow = x.numer().bits() >= 1 && (x.numer() & (x.numer() - 1u32)) == BigInt::zero();
    let den_pow = (x.denom() & (x.denom() - 1u32)) == BigInt::zero();
    num_pow && den_pow
}

/// Binary entropy H2(p) of a rational p in (0,1), as a dyadic-coefficient
/// rational accurate to the working precision.
fn entropy_dyadic(p: &BigRational) -> BigRational {
    assert!(p.is_positive() && *p < BigRational::one());
    let q = BigRational::one() - p;
    // H2(p) = p log2(1/p) + (1-p) log2(1/(1-p))
    p * log2_dyadic(&p.recip()) + &q * log2_dyadic(&q.recip())
}

fn ratio(a: i64, b: i64) -> BigRational {
    BigRational::new(BigInt::from(a), BigInt::from(b))
}

/// The bound registry. Names follow the comparison section of the analysis:
/// `tbf1`/`tbf2` are the product bound and its root relaxation, `bk1`/`bk2`
/// the two strict-availability bounds, `thm1`/`thm2` the exact-covering
/// optima for t=2 and (2,3), `thm3_entropy`/`thm4_simplex`/`cor3`/`cor4` the
/// coset-leader bounds, and the rest the derived reference bounds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BoundName {
    Tbf1,
    Tbf2,
    WangR2,
    StrongLocal,
    PrakashT2,
    Thm1,
    Thm2,
    Thm3Entropy,
    Thm4Simplex,
    Cor3,
    Cor4,
    Bk1,
    Bk2,
    Tamo23,
    Wang23,
}

impl BoundName {
    pub const ALL: [BoundName; 15] = [
        BoundName::Tbf1,
        BoundName::Tbf2,
        BoundName::WangR2,
        BoundName::StrongLocal,
        BoundName::PrakashT2,
        BoundName::Thm1,
        BoundName::Thm2,
        BoundName::Thm3Entropy,
        BoundName::Thm4Simplex,
        BoundName::Cor3,
        BoundName::Cor4,
        BoundName::Bk1,
        BoundName::Bk2,
        BoundName::Tamo23,
        BoundName::Wang23,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            BoundName::Tbf1 => "tbf1",
            BoundName::Tbf2 => "tbf2",
            BoundName::WangR2 => "wang_r2",
            BoundName::StrongLocal => "strong_local",
            BoundName::PrakashT2 => "prakash_t2",
            BoundName::Thm1 => "thm1",
            BoundName::Thm2 => "thm2",
            BoundName::Thm3Entropy => "thm3_entropy",
            BoundName::Thm4Simplex => "thm4_simplex",
            BoundName::Cor3 => "cor3",
            BoundName::Cor4 => "cor4",
            BoundName::Bk1 => "bk1",
            BoundName::Bk2 => "bk2",
            BoundName::Tamo23 => "tamo_23",
            BoundName::Wang23 => "wang_23",
        }
    }
}

impl FromStr for BoundName {
    type Err = Error;

    fn from_str(s: &str) -> Result<BoundName> {
        BoundName::ALL
            .into_iter()
            .find(|b| b.as_str() == s)
            .ok_or_else(|| Error::UnknownName(s.into()))
    }
}

impl fmt::Display for BoundName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One evaluated bound.
#[derive(Clone, Debug)]
pub struct BoundValue {
    pub name: BoundName,
    pub params: BoundParams,
    pub value: Value,
}

/// Evaluates a named bound at the given parameters.
pub fn evaluate_bound(name: BoundName, params: &BoundParams) -> Result<BoundValue> {
    let value = match name {
        // 1 / prod_{j=1..t} (1 + 1/(jr))
        BoundName::Tbf1 => {
            let (r, t) = (params.need_r()?, params.need_t()?);
            let mut product = BigRational::one();
            for j in 1..=t {
                product *= BigRational::one() + ratio(1, (j * r) as i64);
            }
            Value::Exact(product.recip())
        }
        // (t+1)^(-1/r): the r-th-root relaxation of tbf1.
        BoundName::Tbf2 => {
            let (r, t) = (params.need_r()?, params.need_t()?);
            if r == 1 {
                Value::Exact(ratio(1, t as i64 + 1))
            } else {
                Value::Approx(root_reciprocal(t as u64 + 1, r as u32))
            }
        }
        // (2r-1)/(2r+1) + 1/(n(2r+1)), the derived bound for t = 2.
        BoundName::WangR2 => {
            let (r, n) = (params.need_r()?, params.need_n()?);
            Value::Exact(
                ratio(2 * r as i64 - 1, 2 * r as i64 + 1) + ratio(1, (n * (2 * r + 1)) as i64),
            )
        }
        // r/(r+t): every symbol inside an (r+t, r, t+1) local code.
        BoundName::StrongLocal => {
            let (r, t) = (params.need_r()?, params.need_t()?);
            Value::Exact(ratio(r as i64, (r + t) as i64))
        }
        // r/(r+2): sequential recovery of two erasures.
        BoundName::PrakashT2 => {
            let r = params.need_r()?;
            Value::Exact(ratio(r as i64, r as i64 + 2))
        }
        // r/(r+2): exact covering with t = 2, achieved by complete graphs.
        BoundName::Thm1 => {
            let r = params.need_r()?;
            Value::Exact(ratio(r as i64, r as i64 + 2))
        }
        // 3/7: exact covering with (2,3), achieved by Simplex direct sums.
        BoundName::Thm2 => Value::Exact(ratio(3, 7)),
        // H2(1/(t+1)) from the coset-leader argument for (2,t).
        BoundName::Thm3Entropy => {
            let t = params.need_t()?;
            Value::Approx(entropy_dyadic(&ratio(1, t as i64 + 1)))
        }
        // log2(n+1)/n, tight for the Simplex codes.
        BoundName::Thm4Simplex => {
            let n = params.need_n()?;
            let arg = BigRational::from_integer(BigInt::from(n as u64 + 1));
            let log = log2_dyadic(&arg);
            let v = log / BigRational::from_integer(BigInt::from(n as u64));
            if is_power_of_two(&arg) {
                Value::Exact(v)
            } else {
                Value::Approx(v)
            }
        }
        // (r-2)/(r+1) + 3/(r+1) H2(1/(r+2)) for (r,3) exact covering.
        BoundName::Cor3 => {
            let r = params.need_r()?;
            if r < 1 {
                return Err(Error::InvalidParameter("cor3 needs r >= 1".into()));
            }
            let entropy = entropy_dyadic(&ratio(1, r as i64 + 2));
            Value::Approx(ratio(r as i64 - 2, r as i64 + 1) + ratio(3, r as i64 + 1) * entropy)
        }
        // 1 - 3/(r+1) + 3 log2(2r+4) / ((r+1)(2r+3)), for (r,3) with
        // length (r+1)(2r+3)/3.
        BoundName::Cor4 => {
            let r = params.need_r()?;
            if ((r + 1) * (2 * r + 3)) % 3 != 0 {
                return Err(Error::InvalidParameter(format!(
                    "cor4 needs 3 | (r+1)(2r+3); r = {r} fails"
                )));
            }
            let arg = BigRational::from_integer(BigInt::from(2 * r as u64 + 4));
            let log = log2_dyadic(&arg);
            let v = BigRational::one() - ratio(3, r as i64 + 1)
                + ratio(3, ((r + 1) * (2 * r + 3)) as i64) * log;
            if is_power_of_two(&arg) {
                Value::Exact(v)
            } else {
                Value::Approx(v)
            }
        }
        // 1 - t/(r+1) + t/(r+1) / prod_{j=1..r+1} (1 + 1/(j(t-1)))
        BoundName::Bk1 => {
            let (r, t) = (params.need_r()?, params.need_t()?);
            if t < 2 {
                return Err(Error::InvalidParameter("bk1 needs t >= 2".into()));
            }
            let mut product = BigRational::one();
            for j in 1..=(r + 1) {
                product *= BigRational::one() + ratio(1, (j * (t - 1)) as i64);
            }
            Value::Exact(
                BigRational::one() - ratio(t as i64, r as i64 + 1)
                    + ratio(t as i64, r as i64 + 1) * product.recip(),
            )
        }
        // 1 - 3(1 + L1 + L2) / ((r+1)(3 + L1 + 2 L2)) with
        // m = 3n/(r+1), L1' = ceil((2r-1)m/(3(r+2)) - 1/(r+1) - 1),
        // L2 = floor((m - 3 - L1')/2), L1 = m - 3 - 2 L2.
        BoundName::Bk2 => {
            let (r, n) = (params.need_r()?, params.need_n()?);
            if (3 * n) % (r + 1) != 0 {
                return Err(Error::InvalidParameter(format!(
                    "bk2 needs (r+1) | 3n; r = {r}, n = {n} fails"
                )));
            }
            let m = BigInt::from((3 * n / (r + 1)) as u64);
            let m_rat = BigRational::from_integer(m.clone());
            let l1_prime = (ratio(2 * r as i64 - 1, 3 * (r as i64 + 2)) * &m_rat
                - ratio(1, r as i64 + 1)
                - BigRational::one())
            .ceil()
            .to_integer();
            let l2: BigInt =
                num::Integer::div_floor(&(&m - BigInt::from(3) - &l1_prime), &BigInt::from(2));
            let l1: BigInt = &m - BigInt::from(3) - 2 * &l2;
            debug_assert_eq!(&l1 + 2 * &l2, &m - 3);
            let numer = BigRational::from_integer(3 * (BigInt::one() + &l1 + &l2));
            let denom = BigRational::from_integer(
                BigInt::from(r as u64 + 1) * (BigInt::from(3) + &l1 + 2 * &l2),
            );
            if denom.is_zero() || denom.is_negative() {
                return Err(Error::InvalidParameter(format!(
                    "bk2 degenerates at r = {r}, n = {n}"
                )));
            }
            Value::Exact(BigRational::one() - numer / denom)
        }
        // 8/15 + 1/n: the derived (2,3) specialization of the first bound
        // family.
        BoundName::Tamo23 => {
            let n = params.need_n()?;
            Value::Exact(ratio(8, 15) + ratio(1, n as i64))
        }
        // 4/7 + 2/(7n): the derived (2,3) specialization of the second.
        BoundName::Wang23 => {
            let n = params.need_n()?;
            Value::Exact(ratio(4, 7) + ratio(2, 7 * n as i64))
        }
    };
    Ok(BoundValue {
        name,
        params: *params,
        value,
    })
}

/// (base)^(-1/root) as a dyadic rational: 2^P / floor((base * 2^(root P))^(1/root)),
/// carried to the working precision.
fn root_reciprocal(base: u64, root: u32) -> BigRational {
    let p = (PRECISION_BITS + GUARD_BITS) as usize;
    let scaled = BigInt::from(base) << (p * root as usize);
    let root_val = scaled.nth_root(root);
    BigRational::new(BigInt::one() << p, root_val)
}

/// Sweep variable of a bound table.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SweepVariable {
    R,
    T,
}

impl FromStr for SweepVariable {
    type Err = Error;

    fn from_str(s: &str) -> Result<SweepVariable> {
        match s {
            "r" => Ok(SweepVariable::R),
            "t" => Ok(SweepVariable::T),
            other => Err(Error::UnknownName(other.into())),
        }
    }
}

impl BoundParams {
    fn with(self, variable: SweepVariable, value: usize) -> BoundParams {
        let mut p = self;
        match variable {
            SweepVariable::R => p.r = Some(value),
            SweepVariable::T => p.t = Some(value),
        }
        p
    }
}

/// One bound table: rows strictly increasing in the swept parameter.
#[derive(Clone, Debug)]
pub struct BoundTable {
    pub variable: SweepVariable,
    pub names: Vec<BoundName>,
    pub rows: Vec<(usize, Vec<BoundValue>)>,
}

impl BoundTable {
    /// Header "param,<name1>,..."; one row per value, 12 significant digits.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("param");
        for name in &self.names {
            out.push(',');
            out.push_str(name.as_str());
        }
        out.push('\n');
        for (param, values) in &self.rows {
            out.push_str(&param.to_string());
            for v in values {
                out.push(',');
                out.push_str(&v.value.to_decimal(12));
            }
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "variable": match self.variable { SweepVariable::R => "r", SweepVariable::T => "t" },
            "names": self.names.iter().map(|n| n.as_str()).collect::<Vec<_>>(),
            "rows": self.rows.iter().map(|(param, values)| {
                serde_json::json!({
                    "param": param,
                    "values": values.iter().map(|v| v.value.to_string()).collect::<Vec<_>>(),
                })
            }).collect::<Vec<_>>(),
        })
    }
}

/// Evaluates the named bounds over an inclusive integer range of the swept
/// variable.
pub fn sweep(
    names: &[BoundName],
    variable: SweepVariable,
    range: RangeInclusive<usize>,
    fixed: &BoundParams,
) -> Result<BoundTable> {
    let mut rows = Vec::new();
    for param in range {
        let p = fixed.with(variable, param);
        let values = names
            .iter()
            .map(|&name| evaluate_bound(name, &p))
            .collect::<Result<Vec<_>>>()?;
        rows.push((param, values));
    }
    Ok(BoundTable {
        variable,
        names: names.to_vec(),
        rows,
    })
}

/// Smallest parameter in the range at which bound `a` falls strictly below
/// bound `b`, scanning ascending integer values; `None` when it never does.
pub fn find_crossing(
    a: BoundName,
    b: BoundName,
    variable: SweepVariable,
    range: RangeInclusive<usize>,
    fixed: &BoundParams,
) -> Result<Option<usize>> {
    for param in range {
        let p = fixed.with(variable, param);
        let va = evaluate_bound(a, &p)?;
        let vb = evaluate_bound(b, &p)?;
        if va.value.rational() < vb.value.rational() {
            return Ok(Some(param));
        }
    }
    Ok(None)
}
