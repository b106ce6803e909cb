//! Fixed-precision number formatting shared by the CSV, JSON and text writers.

/// Significant digits used for every emitted number.
pub const SIGNIFICANT_DIGITS: usize = 12;

/// Formats `x` like C's `%.12g`: twelve significant digits, trailing zeros
/// dropped, scientific notation outside `[1e-4, 1e12)`. Zero of either sign
/// prints as `0`.
pub fn format_sig(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let precision = SIGNIFICANT_DIGITS - 1;
    let sci = format!("{x:.precision$e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent in {:e} output");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-4..SIGNIFICANT_DIGITS as i32).contains(&exp) {
        let decimals = (precision as i32 - exp) as usize;
        trim_fraction(format!("{x:.decimals$}"))
    } else {
        let sign = if exp < 0 { '-' } else { '+' };
        format!(
            "{}e{sign}{:02}",
            trim_fraction(mantissa.to_string()),
            exp.abs()
        )
    }
}

/// `x` rounded to the value its formatted form denotes.
pub fn round_sig(x: f64) -> f64 {
    format_sig(x).parse().unwrap_or(x)
}

fn trim_fraction(mut s: String) -> String {
    if s.contains('.') {
        while s.ends_with('0') {
            s.pop();
        }
        if s.ends_with('.') {
            s.pop();
        }
    }
    s
}
