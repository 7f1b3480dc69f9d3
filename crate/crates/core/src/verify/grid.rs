use crate::error::{Error, Result};
use crate::exact::{rat, rint, Poly, Rational};
use crate::families::Framework;

/// The finite parameter grid every check runs over.
#[derive(Clone, Debug)]
pub struct GridConfig {
    pub legendre_l_max: u32,
    pub confluent_c: Vec<Rational>,
    pub confluent_l_max: u32,
    pub confluent_nu_max: u32,
    pub hypergeometric_abc: Vec<(Rational, Rational, Rational)>,
    pub hypergeometric_l_max: u32,
    pub hypergeometric_nu_max: u32,
    pub rel_hermite_n: Vec<Rational>,
    pub rel_hermite_nu_max: u32,
    pub pre_laguerre_n: Vec<Rational>,
    pub pre_laguerre_l_max: u32,
    pub pre_laguerre_nu_max: u32,
    /// Largest `l1`, `l2` in composition laws.
    pub composition_l_max: u32,
    /// Fixed second arguments of the addition laws.
    pub addition_x2: Vec<Rational>,
    /// Consecutive pairs drive the `1/N` decay test.
    pub limit_n: Vec<Rational>,
    pub limit_degree_max: u32,
    pub general_samples: Vec<Framework>,
    pub general_l_max: u32,
    pub general_nu_max: u32,
}

fn general_samples() -> Vec<Framework> {
    vec![
        Framework::Weighted { sigma: Poly::from_ints(&[1, 0, 1]), w: Poly::from_ints(&[1, 1]), n: rat(3, 2) },
        Framework::Weighted { sigma: Poly::from_ints(&[0, 1, 1]), w: Poly::from_ints(&[2, 0, 1]), n: rint(2) },
        Framework::HypergeometricType {
            w: Poly::from_ints(&[1, 1]),
            sigma: Poly::new(vec![rint(1), rat(-1, 2)]),
            a: rat(1, 2),
            b: rat(-1, 3),
            exp_arg: Poly::from_ints(&[0, 0, 1]),
        },
    ]
}

impl Default for GridConfig {
    fn default() -> Self {
        GridConfig {
            legendre_l_max: 10,
            confluent_c: vec![rat(1, 3), rat(1, 2), rint(1), rat(5, 2)],
            confluent_l_max: 8,
            confluent_nu_max: 8,
            hypergeometric_abc: vec![
                (rint(0), rint(0), rat(1, 2)),
                (rat(1, 2), rat(1, 2), rint(1)),
                (rint(1), rint(2), rat(3, 2)),
                (rat(-1, 2), rint(1), rat(1, 2)),
            ],
            hypergeometric_l_max: 6,
            hypergeometric_nu_max: 6,
            rel_hermite_n: vec![rint(1), rint(2), rat(7, 2), rint(100)],
            rel_hermite_nu_max: 10,
            pre_laguerre_n: vec![rint(1), rint(2), rat(7, 2), rint(100)],
            pre_laguerre_l_max: 8,
            pre_laguerre_nu_max: 8,
            composition_l_max: 3,
            addition_x2: vec![rat(1, 3), rint(-2)],
            limit_n: vec![rint(10), rint(100), rint(1000)],
            limit_degree_max: 6,
            general_samples: general_samples(),
            general_l_max: 3,
            general_nu_max: 4,
        }
    }
}

impl GridConfig {
    /// A reduced grid for quick runs.
    pub fn small() -> Self {
        GridConfig {
            legendre_l_max: 4,
            confluent_c: vec![rat(1, 2), rint(1)],
            confluent_l_max: 4,
            confluent_nu_max: 4,
            hypergeometric_abc: vec![(rint(0), rint(0), rat(1, 2)), (rint(1), rint(2), rat(3, 2))],
            hypergeometric_l_max: 4,
            hypergeometric_nu_max: 3,
            rel_hermite_n: vec![rint(1), rat(7, 2)],
            rel_hermite_nu_max: 5,
            pre_laguerre_n: vec![rint(2), rat(7, 2)],
            pre_laguerre_l_max: 4,
            pre_laguerre_nu_max: 4,
            composition_l_max: 2,
            addition_x2: vec![rat(1, 3)],
            limit_n: vec![rint(10), rint(100)],
            limit_degree_max: 4,
            general_samples: general_samples(),
            general_l_max: 2,
            general_nu_max: 3,
        }
    }

    pub fn by_name(name: &str) -> Option<Self> {
        match name {
            "default" => Some(GridConfig::default()),
            "small" => Some(GridConfig::small()),
            _ => None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let positive = |v: &[Rational]| v.iter().all(|n| *n > rint(0));
        if self.confluent_c.is_empty()
            || self.hypergeometric_abc.is_empty()
            || self.rel_hermite_n.is_empty()
            || self.pre_laguerre_n.is_empty()
        {
            return Err(Error::InvalidGrid("every family needs at least one parameter point".into()));
        }
        if !positive(&self.rel_hermite_n) || !positive(&self.pre_laguerre_n) || !positive(&self.limit_n) {
            return Err(Error::InvalidGrid("N values must be positive".into()));
        }
        if self.limit_n.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidGrid("limit N values must increase".into()));
        }
        if 2 * self.composition_l_max > self.hypergeometric_l_max.min(self.pre_laguerre_l_max) {
            return Err(Error::InvalidGrid("composition l range exceeds family l range".into()));
        }
        Ok(())
    }
}
