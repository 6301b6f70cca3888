use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};
use serde::{Deserialize, Serialize};

use super::CheckinRecord;

/// Clustered check-ins: users live around a few cities and occasionally
/// check in at another one.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SyntheticSpec {
    pub users: usize,
    pub points_per_user: usize,
    pub seed: u64,
    #[serde(default = "default_cities")]
    pub cities: usize,
    /// Probability that a check-in is away from the user's home city.
    #[serde(default = "default_travel")]
    pub travel: f64,
}

fn default_cities() -> usize {
    6
}

fn default_travel() -> f64 {
    0.1
}

impl SyntheticSpec {
    pub fn new(users: usize, points_per_user: usize, seed: u64) -> Self {
        Self {
            users,
            points_per_user,
            seed,
            cities: default_cities(),
            travel: default_travel(),
        }
    }
}

pub fn synthetic_checkins(spec: &SyntheticSpec) -> Vec<CheckinRecord> {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let cities: Vec<(f64, f64)> = (0..spec.cities.max(1))
        .map(|_| (rng.random_range(-125.0..-70.0), rng.random_range(25.0..50.0)))
        .collect();
    let trip = Normal::new(0.0, 0.5).expect("valid deviation");
    let mut out = Vec::with_capacity(spec.users * spec.points_per_user);
    for user in 0..spec.users {
        let &(cx, cy) = cities.choose(&mut rng).expect("at least one city");
        let spread = Normal::new(0.0, rng.random_range(0.2..3.0)).expect("valid deviation");
        let home = (cx + spread.sample(&mut rng), cy + spread.sample(&mut rng));
        for i in 0..spec.points_per_user {
            let (x, y) = if rng.random_bool(spec.travel) {
                let &(tx, ty) = cities.choose(&mut rng).expect("at least one city");
                (tx + trip.sample(&mut rng), ty + trip.sample(&mut rng))
            } else {
                (home.0 + spread.sample(&mut rng), home.1 + spread.sample(&mut rng))
            };
            out.push(CheckinRecord {
                user_id: user as u64,
                timestamp: format!("2010-01-01T00:00:{:02}Z", i % 60),
                x,
                y,
                location_id: format!("loc{user}-{i}"),
            });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_and_sized() {
        let spec = SyntheticSpec::new(40, 50, 42);
        let a = synthetic_checkins(&spec);
        assert_eq!(a.len(), 2000);
        assert_eq!(a, synthetic_checkins(&spec));
        assert_ne!(a, synthetic_checkins(&SyntheticSpec::new(40, 50, 43)));
        assert!(a.iter().all(|r| r.x.is_finite() && r.y.is_finite()));
    }
}
