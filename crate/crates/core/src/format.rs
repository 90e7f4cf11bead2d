//! Fixed-precision number formatting for machine-readable output.

/// `x` with 12 significant digits and trailing zeros removed, like C's `%.12g`.
///
/// Non-finite values format as `nan`, `inf` and `-inf`.
pub fn sig12(x: f64) -> String {
    if !x.is_finite() {
        return if x.is_nan() {
            "nan".to_owned()
        } else if x > 0.0 {
            "inf".to_owned()
        } else {
            "-inf".to_owned()
        };
    }
    if x == 0.0 {
        return "0".to_owned();
    }
    let scientific = format!("{x:.11e}");
    let (mantissa, exponent) = scientific.split_once('e').expect("exponent marker");
    let exponent: i32 = exponent.parse().expect("integer exponent");
    if !(-4..12).contains(&exponent) {
        return format!("{}e{exponent}", trim_zeros(mantissa));
    }
    let decimals = (11 - exponent) as usize;
    trim_zeros(&format!("{x:.decimals$}")).to_owned()
}

/// `x` with exactly 12 decimals, for human-readable text.
pub fn fixed12(x: f64) -> String {
    format!("{x:.12}")
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twelve_significant_digits() {
        assert_eq!(sig12(0.0), "0");
        assert_eq!(sig12(-0.0), "0");
        assert_eq!(sig12(3.0), "3");
        assert_eq!(sig12(-1.0), "-1");
        assert_eq!(sig12(2.0 / 3.0), "0.666666666667");
        assert_eq!(sig12(0.314_269_680_527_354_5), "0.314269680527");
        assert_eq!(sig12(1.0 / 1.125), "0.888888888889");
        assert_eq!(sig12(123_456.789), "123456.789");
        assert_eq!(sig12(1e-7), "1e-7");
        assert_eq!(sig12(1.5e-5), "1.5e-5");
        assert_eq!(sig12(0.000_123), "0.000123");
        assert_eq!(sig12(1e12), "1e12");
        assert_eq!(sig12(999_999_999_999.9), "1e12");
        assert_eq!(sig12(6.123_233_995_736_766e-17), "6.12323399574e-17");
        assert_eq!(sig12(f64::NAN), "nan");
    }

    #[test]
    fn fixed_decimals() {
        assert_eq!(fixed12(2.0 / 3.0), "0.666666666667");
        assert_eq!(fixed12(2.0), "2.000000000000");
    }
}
