use num_traits::One;

use crate::attach::Status;
use crate::error::Error;
use crate::rational::Q;

use super::*;

fn q(n: i64, d: i64) -> Q {
    Q::new(n.into(), d.into())
}

#[test]
fn minimal_wedge_document() {
    let s = parse_spec(r#"{"spheres":[2,2], "caps":{"N":8,"L":6}}"#).unwrap();
    assert_eq!(s.kind(), SpaceKind::WedgeOfSpheres);
    assert_eq!(s.space, Space::Wedge { spheres: vec![2, 2] });
    assert_eq!((s.caps.max_degree, s.caps.max_length), (8, Some(6)));
    assert!(s.scenario.is_none());
}

#[test]
fn one_relator_document() {
    let s = parse_spec(r#"{"r":2, "word":"[a,b]"}"#).unwrap();
    assert_eq!(s.kind(), SpaceKind::OneRelator);
    assert_eq!(s.caps, crate::Caps::default());
}

#[test]
fn sphere_of_dimension_zero_is_rejected() {
    match parse_spec(r#"{"spheres":[2,0]}"#) {
        Err(Error::Schema { field, .. }) => assert_eq!(field, "spheres[1]"),
        other => panic!("{other:?}"),
    }
}

#[test]
fn schema_errors_name_the_field() {
    let cases = [
        (r#"{"spheres":[2], "caps":{"N":0}}"#, "caps.N"),
        (r#"{"r":2, "word":"[a,c]"}"#, "word"),
        (r#"{"r":1, "word":"a"}"#, "r"),
        (
            r#"{"spheres":[2,2], "scenario":{"n":3,"class":{"type":"lie-word","word":"[x1,x3]"}}}"#,
            "scenario.class.word",
        ),
        (r#"{"spheres":[2], "colour":"red"}"#, "colour"),
        (r#"{"preset":"cp0"}"#, "preset"),
        (r#"{"basis":[{"name":"x","degree":2}], "products":{"x*x":"y"}}"#, "products.x*x"),
        (r#"{"basis":[{"name":"x","degree":2},{"name":"y","degree":3}], "products":{"x*x":"y"}}"#, "products.x*x"),
    ];
    for (doc, want) in cases {
        match parse_spec(doc) {
            Err(Error::Schema { field, .. }) => assert_eq!(field, want, "{doc}"),
            other => panic!("{doc}: {other:?}"),
        }
    }
    match parse_spec("{\n  \"spheres\": [2,\n}") {
        Err(Error::Schema { field, .. }) => assert!(field.starts_with("line 3"), "{field}"),
        other => panic!("{other:?}"),
    }
}

#[test]
fn linear_combinations() {
    assert_eq!(parse_linear("0").unwrap(), vec![]);
    assert_eq!(parse_linear("x").unwrap(), vec![("x".to_string(), Q::one())]);
    assert_eq!(
        parse_linear("2 x2 - 1/2 y + 3*z").unwrap(),
        vec![("x2".into(), q(2, 1)), ("y".into(), q(-1, 2)), ("z".into(), q(3, 1))]
    );
    assert_eq!(parse_linear("-x + x").unwrap(), vec![]);
    assert!(parse_linear("x +").is_none());
    assert!(parse_linear("2 x y").is_none());
}

#[test]
fn documents_round_trip() {
    let docs = [
        r#"{"spheres":[2,3],"caps":{"N":7,"L":5},"scenario":{"n":4,"class":{"type":"lie-word","word":"[x1,x2]"}}}"#,
        r#"{"spheres":[],"scenario":{"n":2,"class":{"type":"zero"}}}"#,
        r#"{"r":4,"word":"[a,b][c,d]","caps":{"N":6}}"#,
        r#"{"preset":"s2xs4"}"#,
        r#"{"kind":"pd-complex","algebra":{"basis":[{"name":"a","degree":2},{"name":"b","degree":2},{"name":"w","degree":4}],"products":{"a*a":"w","b*b":"-w"}}}"#,
        r#"{"basis":[{"name":"x","degree":2,"weight":1},{"name":"y","degree":3,"weight":2}],"differential":{"y":"0"},"scenario":{"n":3,"class":{"type":"functional","values":{"v3_1":"1/2"}}}}"#,
    ];
    for d in docs {
        let s = parse_spec(d).unwrap();
        let back = parse_spec(&s.to_json()).unwrap();
        assert_eq!(s, back, "{d}");
    }
}

#[test]
fn presentations_round_trip_through_documents() {
    for name in ["cp3", "torus3", "surface2", "s3xs5"] {
        let p = preset_cohomology(name).unwrap();
        let back = cdga_presentation(&cdga_doc(&p), "").unwrap();
        assert_eq!(back.betti(), p.betti(), "{name}");
        for i in 1..p.len() {
            for j in 1..p.len() {
                let a = p.product_global(i, j);
                let bi = back.find(&p.names[i]).unwrap();
                let bj = back.find(&p.names[j]).unwrap();
                let b: Vec<(String, Q)> =
                    back.product_global(bi, bj).into_iter().map(|(k, c)| (back.names[k].clone(), c)).collect();
                let a: Vec<(String, Q)> = a.into_iter().map(|(k, c)| (p.names[k].clone(), c)).collect();
                let (mut a, mut b) = (a, b);
                a.sort();
                b.sort();
                assert_eq!(a, b, "{name}: {} * {}", p.names[i], p.names[j]);
            }
        }
    }
}

#[test]
fn product_class_on_two_spheres_is_inert() {
    let s = parse_spec(
        r#"{"spheres":[2,2],"caps":{"N":8,"L":6},"scenario":{"n":3,"class":{"type":"lie-word","word":"[x1,x2]"}}}"#,
    )
    .unwrap();
    let r = run(&s, Command::Inert, &Options::default()).unwrap();
    assert_eq!(r.status, Some(Status::InertUpToCaps));
    assert!(r.failed_checks().is_empty(), "{:?}", r.failed_checks());
    assert_eq!(exit_code(&Ok(r)), 0);
}

#[test]
fn commutator_relator_is_aspherical() {
    let s = parse_spec(r#"{"r":2, "word":"[a,b]"}"#).unwrap();
    let r = run(&s, Command::Aspherical, &Options::default()).unwrap();
    assert_eq!(r.aspherical, Some(true));
    assert!(r.failed_checks().is_empty(), "{:?}", r.failed_checks());
}

#[test]
fn hopf_class_is_not_inert() {
    let s =
        parse_spec(r#"{"spheres":[2],"scenario":{"n":3,"class":{"type":"lie-word","word":"1/2 [x1,x1]"}}}"#).unwrap();
    let r = run(&s, Command::Inert, &Options::default()).unwrap();
    assert_eq!(r.status, Some(Status::NotInert));
    assert_eq!(r.verdict.as_ref().unwrap().witness.as_ref().unwrap().degree, 5);
    assert_eq!(exit_code(&Ok(r)), 0);
}

#[test]
fn deeper_caps_settle_criterion_ii() {
    let s = parse_spec(r#"{"preset":"cp3"}"#).unwrap();
    let r = run(&s, Command::Inert, &Options::default()).unwrap();
    let v = r.verdict.as_ref().unwrap();
    assert_eq!(v.witness.as_ref().unwrap().degree, 7);
    assert_eq!(v.criterion_ii, Some(false));
    assert!(r.failed_checks().is_empty(), "{:?}", r.failed_checks());
}

#[test]
fn certify_runs_the_extra_identities() {
    let s = parse_spec(r#"{"spheres":[2,2],"scenario":{"n":3,"class":{"type":"lie-word","word":"[x1,x2]"}}}"#).unwrap();
    let r = run(&s, Command::Certify, &Options::default()).unwrap();
    assert!(r.wedge_fiber.as_ref().unwrap().matches);
    assert!(r.verdict.as_ref().unwrap().certificate.is_some());
    assert!(r.failed_checks().is_empty(), "{:?}", r.failed_checks());

    let s = parse_spec(r#"{"preset":"surface1"}"#).unwrap();
    let r = run(&s, Command::Certify, &Options::default()).unwrap();
    assert!(r.lemma2.as_ref().unwrap().holds);
    assert!(r.whitehead.unwrap().holds);
    assert_eq!(r.status, Some(Status::InertUpToCaps));
}

#[test]
fn models_of_presentations() {
    let s =
        parse_spec(r#"{"basis":[{"name":"x","degree":2},{"name":"x2","degree":4}],"products":{"x*x":"x2"}}"#).unwrap();
    let r = run(&s, Command::Model, &Options { certify: true, timing: false }).unwrap();
    let m = r.model.unwrap();
    assert_eq!(m.cohomology, vec![1, 0, 1, 0, 1, 0, 0, 0, 0]);
    assert_eq!(
        m.degree_counts.iter().enumerate().filter(|(_, &c)| c > 0).map(|(d, _)| d).collect::<Vec<_>>(),
        vec![2, 5]
    );
    assert!(r.checks.iter().all(|c| c.passed));
}

#[test]
fn exit_codes() {
    let bad = parse_spec(r#"{"spheres":[0]}"#);
    assert_eq!(exit_code(&bad.map(|_| unreachable!())), 20);
    let s = parse_spec(r#"{"spheres":[2,2]}"#).unwrap();
    assert_eq!(exit_code(&run(&s, Command::Inert, &Options::default())), 21);
    let s = parse_spec(r#"{"preset":"cp2"}"#).unwrap();
    assert_eq!(exit_code(&run(&s, Command::Onerel, &Options::default())), 25);
    let s = parse_spec(r#"{"preset":"torus3","caps":{"N":6,"L":4}}"#).unwrap();
    assert_eq!(exit_code(&run(&s, Command::Inert, &Options::default())), 25);
}

#[test]
fn reports_do_not_depend_on_basis_order() {
    let doc = r#"{"kind":"pd-complex","algebra":{"basis":[{"name":"w","degree":4},{"name":"a","degree":2},{"name":"b","degree":2}],"products":{"a*b":"w"}}}"#;
    let v: serde_json::Value = serde_json::from_str(doc).unwrap();
    let base = run(&spec_from_value(&v).unwrap(), Command::Fiber, &Options::default()).unwrap().to_json();
    for seed in 0..4 {
        let s = spec_from_value(&reorder_document(&v, seed)).unwrap();
        assert_eq!(run(&s, Command::Fiber, &Options::default()).unwrap().to_json(), base, "seed {seed}");
    }
}

#[test]
fn sample_documents_parse() {
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../../samples");
    let mut seen = 0;
    for e in std::fs::read_dir(dir).unwrap() {
        let p = e.unwrap().path();
        if p.extension().is_some_and(|x| x == "json") {
            let s = parse_spec(&std::fs::read_to_string(&p).unwrap()).unwrap_or_else(|e| panic!("{p:?}: {e}"));
            assert_eq!(parse_spec(&s.to_json()).unwrap(), s);
            seen += 1;
        }
    }
    assert!(seen > 0);
}
