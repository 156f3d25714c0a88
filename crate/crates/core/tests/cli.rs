use std::process::{Command, Output};

use quartic_torsion::cli::{
    CertificateRecord, SummaryLine, EXIT_INCONCLUSIVE, EXIT_INVALID_CURVE, EXIT_TORSION,
    EXIT_USAGE,
};

const ORDER_NINE_CURVE: &str = "X^4 + X*Z^3 + Y^3*Z";

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_quartic-torsion"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn verify(curve: &str, order: &str, exps: &str, json: bool) -> Output {
    let curve = format!("--curve={curve}");
    let mut args = vec!["verify", &curve, "--order", order, "--exponents", exps];
    if json {
        args.push("--json");
    }
    bin(&args)
}

/// Value after `key:` in the text report.
fn field<'a>(text: &'a str, key: &str) -> &'a str {
    text.lines()
        .find_map(|l| l.strip_prefix(key).and_then(|r| r.strip_prefix(':')))
        .unwrap_or_else(|| panic!("no {key} line"))
        .trim()
}

fn listed(v: &[u32], n: u32) -> String {
    let items: Vec<String> = v.iter().map(u32::to_string).collect();
    format!("mod {n}: [{}]", items.join(", "))
}

#[test]
fn exit_codes() {
    assert_eq!(verify(ORDER_NINE_CURVE, "9", "0,2,3", false).status.code(), Some(EXIT_TORSION));
    assert_eq!(
        verify("X^4 + Y^4 + Z^4", "4", "0,1,0", false).status.code(),
        Some(EXIT_INCONCLUSIVE)
    );
    // Singular: certificate is printed, then the run fails.
    let singular = verify("X^4 + Y^4", "4", "0,1,0", false);
    assert_eq!(singular.status.code(), Some(EXIT_INVALID_CURVE));
    assert!(stdout(&singular).contains("smooth:"));
    // Wrong degree, not homogeneous, not semi-invariant.
    for (curve, order, exps) in [
        ("X^3 + Y^3 + Z^3", "3", "0,1,2"),
        ("X^4 + Y^3 + Z^4", "4", "0,1,0"),
        ("X^4 + Y^4 + X*Z^3", "4", "0,1,2"),
        ("0", "4", "0,1,0"),
    ] {
        let o = verify(curve, order, exps, false);
        assert_eq!(o.status.code(), Some(EXIT_INVALID_CURVE), "{curve}");
        assert!(o.stdout.is_empty());
    }
    // Usage and parse errors.
    for args in [
        &["verify", "--curve", "X^4 + W", "--order", "4", "--exponents", "0,1,0"][..],
        &["verify", "--curve", "X^4", "--order", "4", "--exponents", "0,1"],
        &["verify", "--curve", "X^4", "--order", "0", "--exponents", "0,1,0"],
        &["verify", "--curve", "X^4"],
        &["search", "--order-min", "5", "--order-max", "4"],
        &["search", "--order-min", "1", "--order-max", "2", "--coeffs", "1,x"],
        &["frobnicate"],
        &[],
    ] {
        let o = bin(args);
        assert_eq!(o.status.code(), Some(EXIT_USAGE), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
    assert_eq!(bin(&["--help"]).status.code(), Some(0));
    assert_eq!(bin(&["--version"]).status.code(), Some(0));
    assert_eq!(bin(&["search", "--order-min", "1", "--order-max", "3"]).status.code(), Some(0));
}

#[test]
fn negative_exponents_are_reduced() {
    let a = verify(ORDER_NINE_CURVE, "9", "0,2,3", true);
    let b = verify(ORDER_NINE_CURVE, "9", "-9,-7,12", true);
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn json_round_trip_is_byte_identical() {
    for (curve, order, exps) in [
        (ORDER_NINE_CURVE, "9", "0,2,3"),
        ("X^4 + Y^4 + Z^4", "4", "0,1,0"),
        ("X^4 + Y^4", "4", "0,1,0"),
        ("X^3*Y + Y^3*Z + Z^3*X", "7", "1,4,2"),
        ("X^4 + Y^4 + Z^4 + 3/2*X^2*Y^2", "2", "0,0,1"),
    ] {
        let out = stdout(&verify(curve, order, exps, true));
        let line = out.trim_end_matches('\n');
        assert!(!line.contains('\n'));
        let record: CertificateRecord = serde_json::from_str(line).unwrap();
        assert_eq!(serde_json::to_string(&record).unwrap(), line);
    }
    let out = stdout(&bin(&["search", "--order-min", "1", "--order-max", "12", "--json"]));
    let mut lines: Vec<&str> = out.lines().collect();
    let summary = lines.pop().unwrap();
    let parsed: SummaryLine = serde_json::from_str(summary).unwrap();
    assert_eq!(serde_json::to_string(&parsed).unwrap(), summary);
    assert_eq!(parsed.summary.hits as usize, lines.len());
    for line in lines {
        let record: CertificateRecord = serde_json::from_str(line).unwrap();
        assert_eq!(serde_json::to_string(&record).unwrap(), line);
    }
}

#[test]
fn search_hits_agree_with_verify() {
    let out = stdout(&bin(&[
        "search", "--order-min", "1", "--order-max", "12", "--coeffs", "-1,0,1", "--json",
    ]));
    let lines: Vec<&str> = out.lines().collect();
    assert!(lines.len() > 1);
    for line in &lines[..lines.len() - 1] {
        let record: CertificateRecord = serde_json::from_str(line).unwrap();
        assert_eq!(record.verdict, "torsion");
        let exps = record.exponents.map(|e| e.to_string()).join(",");
        let v = verify(&record.curve, &record.order.to_string(), &exps, true);
        assert_eq!(v.status.code(), Some(EXIT_TORSION));
        assert_eq!(stdout(&v).trim_end(), *line);
    }
}

#[test]
fn text_and_json_reports_agree() {
    for (curve, order, exps) in [
        (ORDER_NINE_CURVE, "9", "0,2,3"),
        ("X^4 + Y^4 + Z^4", "4", "0,1,0"),
        ("X^4 + Y^4 + X*Z^3", "12", "0,3,4"),
        ("X^4 + Y^4 + Z^4 + X^2*Y^2", "2", "0,0,1"),
    ] {
        let j = verify(curve, order, exps, true);
        let t = verify(curve, order, exps, false);
        assert_eq!(j.status.code(), t.status.code());
        let r: CertificateRecord = serde_json::from_str(stdout(&j).trim_end()).unwrap();
        let text = stdout(&t);
        assert_eq!(field(&text, "curve"), r.curve);
        assert_eq!(field(&text, "verdict"), r.verdict);
        assert_eq!(field(&text, "lambda_exp"), r.lambda_exp.to_string());
        assert_eq!(field(&text, "V"), listed(&r.v_character, r.order));
        assert_eq!(field(&text, "H03"), listed(&r.h03, r.order));
        assert_eq!(field(&text, "H12"), listed(&r.h12, r.order));
        assert_eq!(field(&text, "tangent spectrum"), listed(&r.tangent_spectrum, r.order));
        for reason in &r.reasons {
            assert!(text.contains(&format!("  - {reason}")), "{reason}");
        }
    }
}

#[test]
fn order_nine_report() {
    let o = verify(ORDER_NINE_CURVE, "9", "0,2,3", true);
    let r: CertificateRecord = serde_json::from_str(stdout(&o).trim_end()).unwrap();
    assert_eq!(r.curve, "X^4 + Y^3*Z + X*Z^3");
    assert_eq!(r.v_character, [5, 7, 8]);
    assert_eq!(r.h03, [7]);
    assert_eq!(r.tangent_spectrum.len(), 10);
    assert!(!r.tangent_spectrum.contains(&0));
    let on: Vec<&str> = r
        .fixed_points
        .iter()
        .filter(|p| p.on_curve)
        .map(|p| p.axis.as_str())
        .collect();
    assert_eq!(on, ["Y", "Z"]);
    assert!(r.fixed_lines.is_empty());
    assert_eq!(r.verdict, "torsion");
    let text = stdout(&verify(ORDER_NINE_CURVE, "9", "0,2,3", false));
    assert_eq!(field(&text, "Lambda^2 V*"), "mod 9: [3, 5, 6]");
}

#[test]
fn fixed_line_reported() {
    // σ = (4, (0,0,1)) fixes the line Z = 0 pointwise.
    let o = verify("X^4 + Y^4 + Z^4", "4", "0,0,1", true);
    let r: CertificateRecord = serde_json::from_str(stdout(&o).trim_end()).unwrap();
    assert_eq!(r.fixed_lines.len(), 1);
    assert_eq!(r.fixed_lines[0].axis_pair, "XY");
    assert!(r.fixed_lines[0].meets_curve);
    assert_eq!(r.verdict, "inconclusive");
    assert!(!stdout(&o).contains("non-torsion"));
}
