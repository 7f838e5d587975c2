//! Eigenbases of the difference operators and the tridiagonal action of
//! multiplication on them. Pass a directory to also write the CSV dumps.

use racah_bi::kernel::Scalar;
use racah_bi::shift::{bispectral_matrices, build_standard_bi, build_standard_racah, BiParams, RacahParams, Realization};

fn main() {
    let out = std::env::args().nth(1).map(std::path::PathBuf::from);
    let q = |n, d| Scalar::ratio(n, d);
    let families = [
        ("racah", Realization::Racah(build_standard_racah(RacahParams::numeric(q(1, 3), q(1, 5), q(1, 7), q(1, 11))))),
        ("bi", Realization::BannaiIto(build_standard_bi(BiParams::numeric(q(1, 1), q(3, 2), q(1, 2), q(2, 1))))),
    ];
    for (name, realization) in &families {
        let m = bispectral_matrices(realization, 4).unwrap();
        let eigenvalues: Vec<String> = m.eigenvalues.iter().map(Scalar::to_string).collect();
        println!("{name}: eigenvalues [{}]", eigenvalues.join(", "));
        println!("  off-diagonal in P^-1 K P: {:?}", m.diagonal_violation());
        println!("  outside tridiagonal band: {:?}", m.tridiagonal_violation(4));
        print!("{}", m.mult_op_matrix_in_eigenbasis.to_csv(m.basis));
        if let Some(dir) = &out {
            std::fs::create_dir_all(dir).unwrap();
            for (file, matrix) in [("diag", &m.diag_op_matrix), ("mult", &m.mult_op_matrix_in_eigenbasis)] {
                std::fs::write(dir.join(format!("{name}-{file}.csv")), matrix.to_csv(m.basis)).unwrap();
            }
        }
    }
}
