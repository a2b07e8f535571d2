use stablepairs_core::corpus::{generate, CorpusSpec};
use stablepairs_core::degeneration::{find_degeneration, limit_support, DegenerationProblem};
use stablepairs_core::instance::{InstanceFile, Mode};
use stablepairs_core::numeric::slope_along;
use stablepairs_core::stability::{verdict, weight, Clause};
use stablepairs_core::OneParamSubgroup;

const FAMILY: &str = r#"{
  "mode": "free",
  "rank": 2,
  "q": "1",
  "identity_polytope": [["1", "1"], ["1", "-1"], ["-1", "1"], ["-1", "-1"]],
  "frames": [
    { "v_support": [["0", "0"]], "w_support": [["1", "0"], ["-1", "0"], ["0", "1"], ["0", "-1"]] },
    { "v_support": [["-1", "0"], ["1", "0"]], "w_support": [["-1", "0"], ["1", "0"]],
      "v_coeffs": [2.0, 0.5] }
  ]
}"#;

#[test]
fn family_file_end_to_end() {
    let inst = InstanceFile::parse(FAMILY).unwrap().validate().unwrap();
    let v = verdict(&inst.family).unwrap();
    assert!(v.semistable && !v.stable);
    assert_eq!(v.frame_index, Some(1));
    let w = v.witness.unwrap();
    assert_eq!(w.clause, Clause::Stability);
    assert_eq!(w.lambda, OneParamSubgroup::new(vec![0, -1]));

    let (cv, cw) = &inst.coefficients[1];
    let lam = OneParamSubgroup::new(vec![1, 0]);
    assert!(slope_along(&lam, cv, cw).unwrap().abs() < 1e-9);
}

#[test]
fn serialization_round_trip_preserves_verdicts() {
    for mode in [Mode::Free, Mode::Sl] {
        for f in generate(&CorpusSpec::new(mode, 2, 3, 20, 9)).unwrap() {
            let back = InstanceFile::parse(&f.to_json()).unwrap();
            assert_eq!(back.to_json(), f.to_json());
            let a = verdict(&f.validate().unwrap().family).unwrap();
            let b = verdict(&back.validate().unwrap().family).unwrap();
            assert_eq!(a, b);
        }
    }
}

#[test]
fn witnesses_certify_their_clause() {
    for f in generate(&CorpusSpec::new(Mode::Sl, 3, 2, 30, 4)).unwrap() {
        let inst = f.validate().unwrap();
        let v = verdict(&inst.family).unwrap();
        let Some(w) = v.witness else { continue };
        let p = &inst.family.frames()[v.frame_index.unwrap()];
        let (wv, ww) = (weight(&w.lambda, p.v()).unwrap(), weight(&w.lambda, p.w()).unwrap());
        match w.clause {
            Clause::Semistability => assert!(ww > wv),
            Clause::Stability => assert_eq!(ww, wv),
        }
    }
}

#[test]
fn degenerations_of_corpus_supports() {
    for f in generate(&CorpusSpec::new(Mode::Free, 3, 2, 20, 8)).unwrap() {
        let inst = f.validate().unwrap();
        let w = inst.family.frames()[0].w().clone();
        for lam in [[1, 0, 0], [0, -1, 0], [1, 1, -1]] {
            let keep = limit_support(&w, &OneParamSubgroup::new(lam.to_vec())).unwrap();
            let found = find_degeneration(&DegenerationProblem::new(w.clone(), keep.clone()).unwrap()).unwrap().unwrap();
            assert_eq!(limit_support(&w, &found).unwrap(), keep);
        }
    }
}
