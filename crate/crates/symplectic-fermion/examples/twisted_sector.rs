//! The twisted module: correction-operator coefficients, the -d/8
//! spectrum, the quadratic-field identity correction, and the zero-mode
//! action tables at d = 2.

use symplectic_fermion::fock::{Sector, State};
use symplectic_fermion::scalar::{fmt_scalar, Half};
use symplectic_fermion::twisted::{
    delta_coeffs, lowest_weight_report, zero_mode_action_table, TwistedEngine,
};
use symplectic_fermion::zhu::gen_h;

fn main() {
    let table = delta_coeffs(6);
    println!("correction coefficients c_mn (m + n <= 4):");
    for m in 0..=4usize {
        let row: Vec<String> = (0..=(4 - m))
            .map(|n| fmt_scalar(&table.get(m, n)))
            .collect();
        println!("  m={}: {}", m, row.join("  "));
    }

    for d in 1..=2usize {
        let eng = TwistedEngine::new(d);
        let tvac = State::vacuum(Sector::Twisted);
        let l0 = eng.virasoro(0, &tvac);
        println!("d = {}: L_0 1_th = {}", d, l0.display());
        let (even, odd) = lowest_weight_report(d, Half::from_int(2));
        println!(
            "  lowest weights: even {}, odd {}",
            fmt_scalar(&even),
            fmt_scalar(&odd)
        );
        // the quadratic field acquires the <e,f>/8 identity correction
        let h = gen_h(1, 1);
        let full = eng.field_mode(&h, Half::from_int(1), &tvac);
        println!("  o(h^(1,1)) 1_th = {}", full.display());
    }

    let checks = zero_mode_action_table(2);
    let passed = checks.iter().filter(|c| c.pass).count();
    println!(
        "zero-mode action tables at d = 2: {}/{} entries verified",
        passed,
        checks.len()
    );
    assert_eq!(passed, checks.len());
}
