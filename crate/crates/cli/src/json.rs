//! JSON shapes and number formatting.

use std::io::{self, Write};

use arcfourier::{ArcUnion, FourierTuple};
use num_complex::Complex64;
use serde::ser::Serialize;
use serde::Deserialize;
use serde_json::ser::{CompactFormatter, Formatter, PrettyFormatter};

/// `{"arcs": [[s, e], ...], "n": N}` or `{"full": true, "n": N}`.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArcInput {
    #[serde(default)]
    pub arcs: Vec<[f64; 2]>,
    #[serde(default)]
    pub full: bool,
    pub n: usize,
}

impl ArcInput {
    pub fn arc_union(&self) -> Result<ArcUnion, String> {
        if self.full {
            if !self.arcs.is_empty() {
                return Err("`full` and a non-empty `arcs` list are mutually exclusive".into());
            }
            return Ok(ArcUnion::full());
        }
        let raw: Vec<(f64, f64)> = self.arcs.iter().map(|&[s, e]| (s, e)).collect();
        ArcUnion::normalize(&raw).map_err(|e| e.to_string())
    }
}

/// A bare list of `[re, im]` pairs, or the same under `"coefficients"`.
#[derive(Debug, Deserialize)]
#[serde(untagged)]
pub enum CoefficientInput {
    Bare(Vec<[f64; 2]>),
    Wrapped { coefficients: Vec<[f64; 2]> },
}

impl CoefficientInput {
    pub fn tuple(&self) -> Result<FourierTuple, String> {
        let pairs = match self {
            CoefficientInput::Bare(v) | CoefficientInput::Wrapped { coefficients: v } => v,
        };
        if pairs.is_empty() {
            return Err("at least one coefficient is required".into());
        }
        if pairs.iter().flatten().any(|x| !x.is_finite()) {
            return Err("coefficients must be finite".into());
        }
        Ok(FourierTuple::new(
            pairs.iter().map(|&[re, im]| Complex64::new(re, im)).collect(),
        ))
    }
}

pub fn pairs(c: &FourierTuple) -> Vec<[f64; 2]> {
    c.coeffs().iter().map(|z| [z.re, z.im]).collect()
}

pub fn arcs(e: &ArcUnion) -> Vec<[f64; 2]> {
    e.endpoints().into_iter().map(|(s, t)| [s, t]).collect()
}

/// `x` with 17 significant digits, shortest of fixed and exponent notation
/// in the manner of C's `%.17g`. Enough to round-trip every double.
pub fn format_g17(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    let sci = format!("{x:.16e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-5..17).contains(&exp) {
        let decimals = (16 - exp).max(0) as usize;
        trim_zeros(&format!("{x:.decimals$}")).to_string()
    } else {
        format!("{}e{exp}", trim_zeros(mantissa))
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// Wraps a formatter so floats use [`format_g17`].
struct G17<F>(F);

macro_rules! delegate {
    ($($name:ident($($arg:ident: $ty:ty),*)),* $(,)?) => {
        $(
            fn $name<W: ?Sized + Write>(&mut self, w: &mut W $(, $arg: $ty)*) -> io::Result<()> {
                self.0.$name(w $(, $arg)*)
            }
        )*
    };
}

impl<F: Formatter> Formatter for G17<F> {
    fn write_f64<W: ?Sized + Write>(&mut self, w: &mut W, value: f64) -> io::Result<()> {
        w.write_all(format_g17(value).as_bytes())
    }

    delegate! {
        begin_array(),
        end_array(),
        begin_array_value(first: bool),
        end_array_value(),
        begin_object(),
        end_object(),
        begin_object_key(first: bool),
        end_object_key(),
        begin_object_value(),
        end_object_value(),
    }
}

pub fn to_string<T: Serialize>(value: &T, pretty: bool) -> String {
    let mut out = Vec::new();
    let result = if pretty {
        value.serialize(&mut serde_json::Serializer::with_formatter(
            &mut out,
            G17(PrettyFormatter::new()),
        ))
    } else {
        value.serialize(&mut serde_json::Serializer::with_formatter(
            &mut out,
            G17(CompactFormatter),
        ))
    };
    result.expect("serializing to memory cannot fail");
    String::from_utf8(out).expect("serde_json writes UTF-8")
}
