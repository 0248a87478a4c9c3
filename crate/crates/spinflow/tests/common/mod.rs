//! Shared test support: independent oracles and randomized input
//! generators. Everything here stays independent of the library code
//! paths it is used to check.
#![allow(dead_code)] // each integration target uses its own subset

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use spinflow::clifford::{CliffordAlgebraRep, CliffordElement, Spinor};
use spinflow::frame::{validate_frame, FrameManifold, StructureEntry};
use spinflow::linalg::{c, C64};
use spinflow::spinor_field::{make_field, DerivSpec, SpinorField};
use spinflow::tensor::BilinearTensor;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_spinor(rng: &mut ChaCha8Rng, n_spin: usize) -> Spinor {
    loop {
        let v: Vec<C64> = (0..n_spin)
            .map(|_| c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
            .collect();
        let s = Spinor::new(v);
        if s.norm() > 0.1 {
            return s;
        }
    }
}

pub fn random_vector(rng: &mut ChaCha8Rng, n: usize) -> Vec<f64> {
    (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect()
}

pub fn random_unit_vector(rng: &mut ChaCha8Rng, n: usize) -> Vec<f64> {
    loop {
        let v = random_vector(rng, n);
        let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm > 0.1 {
            return v.into_iter().map(|x| x / norm).collect();
        }
    }
}

/// Random spinor field with explicit vector+bivector prescriptions.
pub fn random_field(rng: &mut ChaCha8Rng, rep: &CliffordAlgebraRep) -> SpinorField {
    let n = rep.n;
    let elements: Vec<CliffordElement> = (0..n)
        .map(|_| {
            let mut bivector = Vec::new();
            for j in 0..n {
                for k in (j + 1)..n {
                    if rng.gen_bool(0.5) {
                        bivector.push((j, k, rng.gen_range(-1.0..1.0)));
                    }
                }
            }
            CliffordElement {
                scalar: 0.0,
                vector: random_vector(rng, n),
                bivector,
            }
        })
        .collect();
    let psi = random_spinor(rng, rep.n_spin);
    make_field(rep, psi, DerivSpec::Elements(&elements)).expect("nonzero spinor")
}

/// Random special orthogonal matrix as a product of Givens rotations,
/// row convention.
pub fn random_rotation(rng: &mut ChaCha8Rng, n: usize) -> Vec<Vec<f64>> {
    let mut m: Vec<Vec<f64>> = (0..n)
        .map(|i| (0..n).map(|j| ((i == j) as i32) as f64).collect())
        .collect();
    for p in 0..n {
        for q in (p + 1)..n {
            let theta: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
            let (s, co) = theta.sin_cos();
            for row in m.iter_mut() {
                let a = row[p];
                let b = row[q];
                row[p] = co * a - s * b;
                row[q] = s * a + co * b;
            }
        }
    }
    m
}

/// Conjugates structure constants by an orthogonal matrix:
/// the rotated frame is again orthonormal with the same metric.
pub fn rotate_constants(m: &FrameManifold, o: &[Vec<f64>]) -> FrameManifold {
    let n = m.n;
    let mut entries = Vec::new();
    for a in 0..n {
        for b in (a + 1)..n {
            for ck in 0..n {
                let mut value = 0.0;
                for i in 0..n {
                    for j in 0..n {
                        for k in 0..n {
                            value += o[a][i] * o[b][j] * o[ck][k] * m.c(i, j, k);
                        }
                    }
                }
                if value.abs() > 1e-14 {
                    entries.push(StructureEntry {
                        i: a + 1,
                        j: b + 1,
                        k: ck + 1,
                        value,
                    });
                }
            }
        }
    }
    validate_frame(n, &entries).expect("rotation preserves the Jacobi identity")
}

/// Known Lie-algebra families with random parameters, optionally
/// rotated into a random orthonormal frame.
pub fn random_lie_algebra(rng: &mut ChaCha8Rng) -> FrameManifold {
    let family = rng.gen_range(0..5);
    let base = match family {
        0 => validate_frame(rng.gen_range(3..=5), &[]).unwrap(),
        1 => {
            let tau = rng.gen_range(0.2..2.0);
            validate_frame(
                3,
                &[StructureEntry {
                    i: 1,
                    j: 2,
                    k: 3,
                    value: 2.0 * tau,
                }],
            )
            .unwrap()
        }
        2 => {
            let a = rng.gen_range(0.2..2.0);
            validate_frame(
                3,
                &[
                    StructureEntry {
                        i: 1,
                        j: 3,
                        k: 1,
                        value: a,
                    },
                    StructureEntry {
                        i: 2,
                        j: 3,
                        k: 2,
                        value: -a,
                    },
                ],
            )
            .unwrap()
        }
        3 => {
            let l = rng.gen_range(0.2..2.0);
            validate_frame(
                3,
                &[
                    StructureEntry {
                        i: 1,
                        j: 2,
                        k: 3,
                        value: 2.0 * l,
                    },
                    StructureEntry {
                        i: 2,
                        j: 3,
                        k: 1,
                        value: 2.0 * l,
                    },
                    StructureEntry {
                        i: 3,
                        j: 1,
                        k: 2,
                        value: 2.0 * l,
                    },
                ],
            )
            .unwrap()
        }
        _ => {
            // rank-one Heisenberg algebra in dimension five
            let tau = rng.gen_range(0.2..2.0);
            validate_frame(
                5,
                &[
                    StructureEntry {
                        i: 1,
                        j: 2,
                        k: 5,
                        value: 2.0 * tau,
                    },
                    StructureEntry {
                        i: 3,
                        j: 4,
                        k: 5,
                        value: 2.0 * tau,
                    },
                ],
            )
            .unwrap()
        }
    };
    let o = random_rotation(rng, base.n);
    rotate_constants(&base, &o)
}

/// Riemannian-flow families with ξ fixed as the last frame direction;
/// random rotations act only on the normal directions.
pub fn random_riemannian_flow_manifold(rng: &mut ChaCha8Rng) -> (FrameManifold, usize) {
    let family = rng.gen_range(0..4);
    let base = match family {
        0 => validate_frame(3, &[]).unwrap(),
        1 => {
            let tau = rng.gen_range(0.2..2.0);
            validate_frame(
                3,
                &[StructureEntry {
                    i: 1,
                    j: 2,
                    k: 3,
                    value: 2.0 * tau,
                }],
            )
            .unwrap()
        }
        2 => {
            let l = rng.gen_range(0.2..2.0);
            validate_frame(
                3,
                &[
                    StructureEntry {
                        i: 1,
                        j: 2,
                        k: 3,
                        value: 2.0 * l,
                    },
                    StructureEntry {
                        i: 2,
                        j: 3,
                        k: 1,
                        value: 2.0 * l,
                    },
                    StructureEntry {
                        i: 3,
                        j: 1,
                        k: 2,
                        value: 2.0 * l,
                    },
                ],
            )
            .unwrap()
        }
        _ => {
            let tau = rng.gen_range(0.2..2.0);
            validate_frame(
                5,
                &[
                    StructureEntry {
                        i: 1,
                        j: 2,
                        k: 5,
                        value: 2.0 * tau,
                    },
                    StructureEntry {
                        i: 3,
                        j: 4,
                        k: 5,
                        value: 2.0 * tau,
                    },
                ],
            )
            .unwrap()
        }
    };
    let n = base.n;
    // Rotate the normal plane only, keeping ξ = e_n a frame direction.
    let mut o = random_rotation(rng, n - 1);
    for row in o.iter_mut() {
        row.push(0.0);
    }
    let mut last = vec![0.0; n];
    last[n - 1] = 1.0;
    o.push(last);
    (rotate_constants(&base, &o), n)
}

/// Random almost-complex structure J = O·J₀·Oᵀ in row convention.
pub fn random_almost_complex(rng: &mut ChaCha8Rng, n: usize) -> BilinearTensor {
    assert!(n.is_multiple_of(2));
    let o = random_rotation(rng, n);
    let mut j0 = vec![vec![0.0; n]; n];
    for k in 0..n / 2 {
        j0[2 * k][2 * k + 1] = 1.0;
        j0[2 * k + 1][2 * k] = -1.0;
    }
    let mut out = vec![vec![0.0; n]; n];
    for a in 0..n {
        for b in 0..n {
            let mut acc = 0.0;
            for i in 0..n {
                for jj in 0..n {
                    acc += o[a][i] * j0[i][jj] * o[b][jj];
                }
            }
            out[a][b] = acc;
        }
    }
    BilinearTensor::from_rows(&out)
}

/// Independent Koszul oracle: solves the defining linear system
/// {metric compatibility, prescribed torsion} for the connection
/// coefficients by dense least squares, no closed form involved.
pub fn koszul_brute_force(m: &FrameManifold) -> Vec<f64> {
    let n = m.n;
    let vars = n * n * n;
    let idx = |i: usize, j: usize, k: usize| (i * n + j) * n + k;

    let mut rows: Vec<(Vec<f64>, f64)> = Vec::new();
    // metric compatibility: Γ_ij^k + Γ_ik^j = 0
    for i in 0..n {
        for j in 0..n {
            for k in j..n {
                let mut row = vec![0.0; vars];
                row[idx(i, j, k)] += 1.0;
                row[idx(i, k, j)] += 1.0;
                rows.push((row, 0.0));
            }
        }
    }
    // torsion: Γ_ij^k − Γ_ji^k = c_ij^k
    for i in 0..n {
        for j in (i + 1)..n {
            for k in 0..n {
                let mut row = vec![0.0; vars];
                row[idx(i, j, k)] += 1.0;
                row[idx(j, i, k)] -= 1.0;
                rows.push((row, m.c(i, j, k)));
            }
        }
    }

    // normal equations AᵀA x = AᵀB, solved by Gaussian elimination
    // with partial pivoting
    let mut ata = vec![vec![0.0f64; vars]; vars];
    let mut atb = vec![0.0f64; vars];
    for (row, b) in &rows {
        for p in 0..vars {
            if row[p] == 0.0 {
                continue;
            }
            atb[p] += row[p] * b;
            for q in 0..vars {
                if row[q] != 0.0 {
                    ata[p][q] += row[p] * row[q];
                }
            }
        }
    }
    for col in 0..vars {
        let pivot_row = (col..vars)
            .max_by(|&a, &b| ata[a][col].abs().partial_cmp(&ata[b][col].abs()).unwrap())
            .unwrap();
        ata.swap(col, pivot_row);
        atb.swap(col, pivot_row);
        let pivot = ata[col][col];
        assert!(
            pivot.abs() > 1e-10,
            "Koszul system must determine the connection uniquely"
        );
        for row in (col + 1)..vars {
            let factor = ata[row][col] / pivot;
            if factor == 0.0 {
                continue;
            }
            for q in col..vars {
                ata[row][q] -= factor * ata[col][q];
            }
            atb[row] -= factor * atb[col];
        }
    }
    let mut x = vec![0.0f64; vars];
    for row in (0..vars).rev() {
        let mut acc = atb[row];
        for q in (row + 1)..vars {
            acc -= ata[row][q] * x[q];
        }
        x[row] = acc / ata[row][row];
    }
    x
}
