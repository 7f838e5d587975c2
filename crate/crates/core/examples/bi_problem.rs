//! The Bannai-Ito algebra from a threefold osp(1|2) tensor product, and the
//! Racah algebra inside it.

use racah_bi::dunkl::{bi_generators, verify_bi_problem, verify_dunkl_embedding};

fn main() {
    let g = bi_generators();
    println!("X = {}", g.x);
    println!("Y = {}", g.y);
    println!("Z = {}", g.z);
    for check in verify_bi_problem().into_iter().chain(verify_dunkl_embedding()) {
        println!("{:<48} {}", check.id, if check.passed() { "pass" } else { "FAIL" });
    }
}
