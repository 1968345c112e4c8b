use balanced_cli::checks::run_all;
use balanced_cli::spec_file::{bundled, SpecFile};
use balanced_cli::table2;
use balanced_core::critexp::e_total;
use balanced_core::quadratic::QuadNum;
use num_bigint::BigInt;

fn sqrt(d: i64) -> QuadNum {
    QuadNum::sqrt(&BigInt::from(d)).unwrap()
}

fn rat(p: i64, q: i64, d: i64) -> QuadNum {
    QuadNum::rational(p, q, &BigInt::from(d)).unwrap()
}

#[test]
fn specs_round_trip() {
    for text in [bundled::X9, bundled::WORKED_EXAMPLE] {
        let file = SpecFile::parse(text).unwrap();
        let spec = file.to_spec().unwrap();
        let again = SpecFile::parse(&SpecFile::from_spec(&spec).render()).unwrap();
        assert_eq!(again.to_spec().unwrap(), spec);
    }
    for row in table2::rows() {
        let file = SpecFile {
            slope: row.slope.clone(),
            y: row.y.clone(),
            yp: row.yp.clone(),
            shift_y: 0,
            shift_yp: 0,
            expected: None,
        };
        let spec = file.to_spec().unwrap();
        let again = SpecFile::parse(&SpecFile::from_spec(&spec).render()).unwrap();
        assert_eq!(again.to_spec().unwrap(), spec);
    }
}

#[test]
fn shifts_default_to_zero() {
    let file = SpecFile::parse(r#"{"slope": "0;;(1)", "y": "34", "yp": "0102"}"#).unwrap();
    assert_eq!((file.shift_y, file.shift_yp), (0, 0));
    assert!(file.to_spec().is_ok());
}

#[test]
fn bad_specs_are_rejected() {
    let bad = [
        r#"{"slope": "0;;(1)", "y": "011", "yp": "23"}"#,
        r#"{"slope": "0;;(1)", "y": "01", "yp": "12"}"#,
        r#"{"slope": "0;;(1)", "y": "01", "yp": "23", "shift_y": 2}"#,
        r#"{"slope": "1;;(1)", "y": "01", "yp": "23"}"#,
    ];
    for text in bad {
        let err = SpecFile::parse(text).unwrap().to_spec().unwrap_err();
        assert_eq!(err.exit_code(), 2, "{text}");
    }
    assert_eq!(SpecFile::parse("{").unwrap_err().exit_code(), 2);
}

#[test]
fn stored_values_are_the_published_expressions() {
    let x9 = SpecFile::parse(bundled::X9).unwrap().expected.unwrap();
    assert_eq!(x9.e.unwrap(), rat(7, 6, 2));
    assert_eq!(x9.e_star.unwrap(), (sqrt(2) + 1) / (sqrt(2) * 6 + 10) + 1);

    let w = SpecFile::parse(bundled::WORKED_EXAMPLE).unwrap().expected.unwrap();
    assert_eq!(w.e.unwrap(), rat(7, 8, 21) + 1);
    assert_eq!(w.e_star.unwrap(), (sqrt(21) + 3) / 12 + 1);

    let published: Vec<(u32, QuadNum, QuadNum)> = vec![
        (3, sqrt(2).recip().unwrap() + 2, sqrt(2).recip().unwrap() + 2),
        (4, (sqrt(5) + 1) / 4 + 1, (sqrt(5) + 1) / 4 + 1),
        (5, rat(3, 2, 2), rat(3, 2, 2)),
        (6, rat(4, 3, 6), rat(4, 3, 6)),
        (7, rat(5, 4, 10), rat(5, 4, 10)),
        (8, rat(6, 5, 2), (sqrt(2) * 3 + 12) / 14),
        (9, rat(7, 6, 2), (sqrt(2) * 2 - 1) / 14 + 1),
        (10, rat(8, 7, 13), sqrt(13) / 26 + 1),
    ];
    let rows = table2::rows();
    assert_eq!(rows.len(), published.len());
    for (row, (d, e, e_star)) in rows.iter().zip(published) {
        assert_eq!(row.d, d);
        assert_eq!(row.e, e, "E for d = {d}");
        assert_eq!(row.e_star, e_star, "E* for d = {d}");
    }
}

#[test]
fn table_reproduces() {
    let results = table2::run(&table2::rows()).unwrap();
    assert!(results.iter().all(|r| r.matches));
}

#[test]
fn bundled_specs_verify() {
    for text in [bundled::X9, bundled::WORKED_EXAMPLE] {
        let file = SpecFile::parse(text).unwrap();
        let spec = file.to_spec().unwrap();
        let report = e_total(&spec).unwrap();
        for check in run_all(&spec, &report, 5_000, file.expected.as_ref()) {
            assert!(check.passed(), "{}", check.line());
        }
    }
}

#[test]
fn report_json_shape() {
    let spec = SpecFile::parse(bundled::X9).unwrap().to_spec().unwrap();
    let v = serde_json::to_value(e_total(&spec).unwrap()).unwrap();
    for key in ["E", "Estar", "E_short", "h", "H", "classes", "short_table", "attained_by"] {
        assert!(v.get(key).is_some(), "{key}");
    }
    assert_eq!(v["E"]["a"], "7");
    assert_eq!(v["E"]["c"], "6");
    assert_eq!(v["H"], 8);
    assert_eq!(v["classes"][0]["S_hat"], serde_json::json!([[6, 12]]));
    let row = &v["short_table"][0];
    assert!(row["projection"].is_string() && row["ret_len"].is_u64() && row["ratio"].is_string());
}
