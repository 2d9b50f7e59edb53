use num_rational::Ratio;

/// `P(S_2 = O) + P(S_4 = O, S_2 != O)` by walking all `(2d)^4` four-step paths.
pub fn four_step_return(dim: usize) -> Ratio<u64> {
    assert!(dim >= 1, "dimension must be at least 1");
    let dirs = 2 * dim;
    let mut pos = vec![0i64; dim];
    let mut count: u64 = 0;
    let step = |pos: &mut [i64], dir: usize, sign: i64| {
        pos[dir / 2] += sign * if dir.is_multiple_of(2) { 1 } else { -1 };
    };
    for s1 in 0..dirs {
        step(&mut pos, s1, 1);
        for s2 in 0..dirs {
            step(&mut pos, s2, 1);
            let back_at_two = pos.iter().all(|&c| c == 0);
            for s3 in 0..dirs {
                step(&mut pos, s3, 1);
                for s4 in 0..dirs {
                    step(&mut pos, s4, 1);
                    if back_at_two || pos.iter().all(|&c| c == 0) {
                        count += 1;
                    }
                    step(&mut pos, s4, -1);
                }
                step(&mut pos, s3, -1);
            }
            step(&mut pos, s2, -1);
        }
        step(&mut pos, s1, -1);
    }
    Ratio::new(count, (dirs as u64).pow(4))
}

/// `(4d^2 + 4d - 3) / (8 d^3)`.
pub fn four_step_closed_form(dim: usize) -> Ratio<u64> {
    let d = dim as u64;
    Ratio::new(4 * d * d + 4 * d - 3, 8 * d * d * d)
}
