use odeq_core::eq::DiffEq;

#[test]
fn probe_parse() {
    eprintln!("start");
    let mut f = odeq_core::eq::parse_bipoly("(T - z*S)^2").unwrap();
    let mut prod = odeq_core::eq::parse_bipoly("1").unwrap();
    for j in 1..=6 {
        prod = prod.mul(&odeq_core::eq::parse_bipoly(&format!("S - {j}")).unwrap());
    }
    f = f.sub(&prod);
    eprintln!("built bipoly");
    let eq = DiffEq::from_bipoly(f).unwrap();
    eprintln!("validated");
    let m = odeq_core::curve::hyperelliptic_model(&eq).unwrap();
    eprintln!("model: genus {}", m.genus);
    let v = odeq_core::painleve::pp_check(&eq).unwrap();
    eprintln!("verdict: {:?}", v);
}
