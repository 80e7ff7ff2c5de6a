//! Number formatting shared by the report renderers and the CLI.

/// Formats a float with 12 significant digits, trimming trailing zeros.
///
/// All numeric output of the crate goes through this function so that
/// machine-readable reports are byte-stable across runs.
pub fn sig12(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return format!("{x}");
    }
    let sci = format!("{:.11e}", x);
    let (mant, exp) = sci.split_once('e').expect("scientific format");
    let exp: i32 = exp.parse().expect("exponent");
    if !(-4..12).contains(&exp) {
        let mant = mant.trim_end_matches('0').trim_end_matches('.');
        return format!("{mant}e{exp}");
    }
    let places = (11 - exp).max(0) as usize;
    let fixed = format!("{:.*}", places, x);
    if fixed.contains('.') {
        fixed
            .trim_end_matches('0')
            .trim_end_matches('.')
            .to_string()
    } else {
        fixed
    }
}
