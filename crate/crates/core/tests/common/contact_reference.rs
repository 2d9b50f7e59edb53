//! Direct-method Gillespie simulation of the contact process alone.
//!
//! Only infected sites carry rate: each recovers at rate 1 and pushes an
//! infection attempt to a uniformly chosen neighbor at total rate `2 d lambda`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;

pub struct ReferenceContact {
    dim: usize,
    side: usize,
    lambda: f64,
    infected: Vec<usize>,
    slot: Vec<usize>,
}

const HEALTHY: usize = usize::MAX;

impl ReferenceContact {
    pub fn all_infected(dim: usize, side: usize, lambda: f64) -> Self {
        let n = side.pow(dim as u32);
        Self {
            dim,
            side,
            lambda,
            infected: (0..n).collect(),
            slot: (0..n).collect(),
        }
    }

    fn neighbor(&self, site: usize, dir: usize) -> usize {
        let axis = dir / 2;
        let stride = self.side.pow((self.dim - 1 - axis) as u32);
        let c = (site / stride) % self.side;
        let nc = if dir.is_multiple_of(2) { (c + 1) % self.side } else { (c + self.side - 1) % self.side };
        site + nc * stride - c * stride
    }

    fn recover(&mut self, site: usize) {
        let s = self.slot[site];
        let last = *self.infected.last().unwrap();
        self.infected.swap_remove(s);
        if last != site {
            self.slot[last] = s;
        }
        self.slot[site] = HEALTHY;
    }

    fn infect(&mut self, site: usize) {
        if self.slot[site] == HEALTHY {
            self.slot[site] = self.infected.len();
            self.infected.push(site);
        }
    }

    /// Runs to time `t` and returns the infected fraction.
    pub fn run<R: Rng>(&mut self, t: f64, rng: &mut R) -> f64 {
        let per_site = 1.0 + 2.0 * self.dim as f64 * self.lambda;
        let mut now = 0.0;
        while !self.infected.is_empty() {
            let rate = self.infected.len() as f64 * per_site;
            let u: f64 = rng.random();
            now += -(1.0 - u).ln() / rate;
            if now > t {
                break;
            }
            let site = self.infected[rng.random_range(0..self.infected.len())];
            if rng.random::<f64>() * per_site < 1.0 {
                self.recover(site);
            } else {
                let dir = rng.random_range(0..2 * self.dim);
                let target = self.neighbor(site, dir);
                self.infect(target);
            }
        }
        self.infected.len() as f64 / self.slot.len() as f64
    }
}

/// Mean infected fraction at `t` over `replicas` runs, with its standard error.
pub fn reference_survival(dim: usize, side: usize, lambda: f64, t: f64, replicas: usize, seed: u64) -> (f64, f64) {
    let mut rng = ChaCha20Rng::seed_from_u64(seed ^ 0x5eed_0fc0_ffee);
    let samples: Vec<f64> = (0..replicas)
        .map(|_| ReferenceContact::all_infected(dim, side, lambda).run(t, &mut rng))
        .collect();
    let n = samples.len() as f64;
    let mean = samples.iter().sum::<f64>() / n;
    let var = samples.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (n - 1.0);
    (mean, (var / n).sqrt())
}
