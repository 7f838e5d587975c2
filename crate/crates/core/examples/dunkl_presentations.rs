//! su(1,1) and osp(1|2) realized with Dunkl operators in one variable.

use racah_bi::dunkl::{build_osp12_single, build_su11_single, verify_osp12, verify_su11};

fn main() {
    let su = build_su11_single(1);
    println!("su(1,1): K0 = {}", su.k0);
    println!("  K+ = {}", su.kp);
    println!("  K- = {}", su.km);
    println!("  Casimir = {}", su.c);
    let osp = build_osp12_single(1);
    println!("osp(1|2): A0 = {}", osp.a0);
    println!("  A+ = {}", osp.ap);
    println!("  sCasimir = {}", osp.s);

    for check in verify_su11().into_iter().chain(verify_osp12()) {
        println!("{:<48} {}", check.id, if check.passed() { "pass" } else { "FAIL" });
    }
}
