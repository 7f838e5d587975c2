//! The Racah algebra from intermediate Casimirs of a threefold su(1,1)
//! tensor product realized with Dunkl operators.

use racah_bi::dunkl::{su_casimirs, verify_racah_problem};

fn main() {
    let c = su_casimirs();
    println!("C12 = {}", c.pair12.c);
    println!("C23 = {}", c.pair23.c);
    println!("C123 = {}", c.total.c);
    for check in verify_racah_problem() {
        println!("{:<48} {}", check.id, if check.passed() { "pass" } else { "FAIL" });
    }
}
