use gtboson::basisgen::basis_set;
use gtboson::coupling::{isoscalar_table, su3_table, CouplingTable, IsoscalarEntry, Normalization};
use gtboson::exact::rat;
use gtboson::gelfand::{enumerate_fundamental_words, enumerate_patterns, BinaryWord, GelfandPattern, IrrepLabel};
use gtboson::polyengine::SqrtRational;
use serde::de::DeserializeOwned;
use serde::Serialize;

fn round_trip<T: Serialize + DeserializeOwned + PartialEq + std::fmt::Debug>(v: &T) -> String {
    let s = serde_json::to_string(v).unwrap();
    let back: T = serde_json::from_str(&s).unwrap();
    assert_eq!(&back, v);
    assert_eq!(serde_json::to_string(&back).unwrap(), s);
    s
}

fn label(h: &[i64]) -> IrrepLabel {
    IrrepLabel::new(h.to_vec()).unwrap()
}

#[test]
fn labels_and_patterns() {
    assert_eq!(round_trip(&label(&[2, 1, 0])), "[2,1,0]");
    for p in enumerate_patterns(&label(&[2, 1, 0, 0])) {
        round_trip(&p);
    }
    let p = GelfandPattern::parse_compact("2,1,0;2,1;2").unwrap();
    assert_eq!(round_trip(&p), r#"{"n":3,"rows":[[2,1,0],[2,1],[2]]}"#);
    assert!(serde_json::from_str::<GelfandPattern>(r#"{"n":2,"rows":[[2,1,0],[2,1],[2]]}"#).is_err());
    assert!(serde_json::from_str::<GelfandPattern>(r#"{"n":2,"rows":[[1,0],[2]]}"#).is_err());
    assert!(serde_json::from_str::<IrrepLabel>("[0,1]").is_err());
}

#[test]
fn words() {
    for w in enumerate_fundamental_words(5) {
        round_trip(&w);
    }
    let w: BinaryWord = serde_json::from_str("\"1010\"").unwrap();
    assert_eq!(w.columns(), vec![1, 3]);
}

#[test]
fn sqrt_rationals() {
    let v = SqrtRational::new(rat(-3, 4), rat(8, 5)).unwrap();
    assert_eq!(round_trip(&v), r#"{"q":"-3/1","r":"1/10"}"#);
    round_trip(&SqrtRational::zero());
    assert!(serde_json::from_str::<SqrtRational>(r#"{"q":"1/1","r":"4/1"}"#).is_err());
}

#[test]
fn basis_polynomials() {
    for b in basis_set(&label(&[2, 1, 0])).unwrap() {
        round_trip(&b);
    }
}

#[test]
fn coupling_tables() {
    let t = su3_table(&[label(&[2, 1, 0]), label(&[2, 1, 0]), label(&[2, 1, 0])], Some(2)).unwrap();
    round_trip(&t);
    let cg = t.with_normalization(Normalization::Cg);
    let s = round_trip(&cg);
    assert!(s.contains("\"normalization\":\"cg\""), "{s}");
    let iso: Vec<IsoscalarEntry> = isoscalar_table(&t).unwrap();
    round_trip(&iso);
    let back: CouplingTable = serde_json::from_str(&serde_json::to_string(&t).unwrap()).unwrap();
    assert_eq!(back.entries.len(), t.entries.len());
}
