//! Text output helpers.

/// `%.12g`: 12 significant digits, trailing zeros trimmed, exponent form
/// outside `[1e-4, 1e12)`.
pub fn fmt_g(x: f64) -> String {
    const P: i32 = 12;
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        return "0".into();
    }
    let sci = format!("{:.*e}", (P - 1) as usize, x);
    let (mant, exp) = sci.split_once('e').expect("exponent form");
    let exp: i32 = exp.parse().expect("integer exponent");
    if exp < -4 || exp >= P {
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{}e{sign}{:02}", trim(mant), exp.abs())
    } else {
        trim(&format!("{:.*}", (P - 1 - exp) as usize, x)).to_string()
    }
}

fn trim(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// `fmt_g` for optional values; empty when absent.
pub fn fmt_opt(x: Option<f64>) -> String {
    x.map(fmt_g).unwrap_or_default()
}

pub fn join_usize(xs: &[usize], sep: &str) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}

pub fn fmt_point(xs: &[f64]) -> String {
    format!("({})", xs.iter().map(|&x| fmt_g(x)).collect::<Vec<_>>().join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matches_printf_g() {
        assert_eq!(fmt_g(7.0), "7");
        assert_eq!(fmt_g(7.0 / 3.0), "2.33333333333");
        assert_eq!(fmt_g(-0.5), "-0.5");
        assert_eq!(fmt_g(1e-5), "1e-05");
        assert_eq!(fmt_g(123456789012345.0), "1.23456789012e+14");
        assert_eq!(fmt_g(0.0001), "0.0001");
        assert_eq!(fmt_g(99.99999999999999), "100");
        assert_eq!(fmt_g(f64::INFINITY), "inf");
    }
}
