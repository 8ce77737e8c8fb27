use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::constructions::{all_code, diag_full_group, inj, rep, singleton};
use crate::error::{HntError, Result};
use crate::hamming::{dist_to_code, num_profile, Code, GraphParams, NumProfile, Symbol, Vertex};

/// The rows of the table of diagonally neighbour-transitive codes that fail
/// to be diagonally 2-neighbour transitive.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Table1Row {
    Singleton,
    Rep,
    Inj,
    /// Subsets of `All(q,q)`.
    AllQ,
    /// Subsets of `All(pq,q)` with `p >= 2`.
    AllPq,
}

impl Table1Row {
    pub const ALL: [Table1Row; 5] = [
        Table1Row::Singleton,
        Table1Row::Rep,
        Table1Row::Inj,
        Table1Row::AllQ,
        Table1Row::AllPq,
    ];

    /// Smallest `(m, q)` meeting the row's condition.
    pub fn smallest_params(self) -> (usize, usize) {
        match self {
            Table1Row::Singleton => (3, 3),
            Table1Row::Rep => (4, 3),
            Table1Row::Inj => (4, 5),
            Table1Row::AllQ => (4, 4),
            Table1Row::AllPq => (6, 3),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Table1Row::Singleton => "singleton",
            Table1Row::Rep => "rep",
            Table1Row::Inj => "inj",
            Table1Row::AllQ => "allq",
            Table1Row::AllPq => "allpq",
        }
    }

    fn check(self, m: usize, q: usize) -> Result<()> {
        let ok = match self {
            Table1Row::Singleton => q >= 3 && m >= 2,
            Table1Row::Rep => m > q && q >= 3,
            Table1Row::Inj => m >= 4 && m < q,
            Table1Row::AllQ => q >= 4 && m == q,
            Table1Row::AllPq => m % q == 0 && q > m / q && m / q >= 2,
        };
        if ok {
            Ok(())
        } else {
            Err(HntError::param(format!(
                "(m,q)=({m},{q}) violates the condition of the {self} row"
            )))
        }
    }
}

impl fmt::Display for Table1Row {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Table1Row {
    type Err = HntError;

    fn from_str(s: &str) -> Result<Self> {
        Table1Row::ALL
            .into_iter()
            .find(|r| r.name() == s)
            .ok_or_else(|| HntError::param(format!("unknown table row {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Table1Report {
    pub row: Table1Row,
    pub m: usize,
    pub q: usize,
    pub mu: Vec<Symbol>,
    pub nu: Vec<Symbol>,
    pub num_mu: String,
    pub num_nu: String,
    /// Distances of `mu` and `nu` to each code checked. Rows covering a
    /// family of subsets list the smallest and largest admissible member.
    pub distances: Vec<(String, usize, usize)>,
    pub profiles_differ: bool,
    /// `nu` lies outside the orbit of `mu` under `Diag_m(S_q) ⋊ S_m`.
    pub orbit_separates: bool,
    pub pass: bool,
}

/// Instantiates the row's witnesses (0-based symbols) and checks them.
pub fn verify_table1_row(row: Table1Row, m: usize, q: usize) -> Result<Table1Report> {
    row.check(m, q)?;
    let params = GraphParams::new(m, q)?;
    let (mu, nu) = witnesses(row, m, q);
    let mu_v = Vertex::new(params, mu.clone())?;
    let nu_v = Vertex::new(params, nu.clone())?;
    let mut distances = Vec::new();
    for (name, code) in codes(row, m, q)? {
        distances.push((
            name,
            dist_to_code(&mu_v, &code)?,
            dist_to_code(&nu_v, &code)?,
        ));
    }
    let (num_mu, num_nu): (NumProfile, NumProfile) = (num_profile(&mu_v), num_profile(&nu_v));
    let orbit = diag_full_group(m, q)?.vertex_orbit(&mu_v)?;
    let orbit_separates = !orbit.contains(&nu_v);
    let profiles_differ = num_mu != num_nu;
    let pass = profiles_differ && orbit_separates && distances.iter().all(|d| d.1 == 2 && d.2 == 2);
    Ok(Table1Report {
        row,
        m,
        q,
        mu,
        nu,
        num_mu: num_mu.to_string(),
        num_nu: num_nu.to_string(),
        distances,
        profiles_differ,
        orbit_separates,
        pass,
    })
}

fn witnesses(row: Table1Row, m: usize, q: usize) -> (Vec<Symbol>, Vec<Symbol>) {
    let id = |n: usize| (0..n as Symbol).collect::<Vec<_>>();
    match row {
        Table1Row::Singleton | Table1Row::Rep => {
            let mut mu = vec![0; m];
            let mut nu = vec![0; m];
            mu[..2].copy_from_slice(&[1, 1]);
            nu[..2].copy_from_slice(&[1, 2]);
            (mu, nu)
        }
        Table1Row::Inj | Table1Row::AllQ => {
            let (mut mu, mut nu) = (id(m), id(m));
            mu[1] = 0;
            mu[2] = 0;
            nu[1] = 0;
            nu[3] = 2;
            (mu, nu)
        }
        Table1Row::AllPq => {
            let alpha = id(q);
            let mut mu_hat = alpha.clone();
            mu_hat[1] = 0;
            mu_hat[2] = 0;
            let mut nu_hat = alpha.clone();
            nu_hat[1] = 0;
            let p = m / q;
            let mut mu = mu_hat;
            let mut nu = [nu_hat.clone(), nu_hat].concat();
            for _ in 1..p {
                mu.extend_from_slice(&alpha);
            }
            for _ in 2..p {
                nu.extend_from_slice(&alpha);
            }
            (mu, nu)
        }
    }
}

/// The code, or for subset rows the two extreme codes: any admissible `C`
/// lies between them, so distance 2 to both forces distance 2 to `C`.
fn codes(row: Table1Row, m: usize, q: usize) -> Result<Vec<(String, Code)>> {
    Ok(match row {
        Table1Row::Singleton => vec![("{(0,...,0)}".into(), singleton(m, q, 0)?)],
        Table1Row::Rep => vec![(format!("Rep({m},{q})"), rep(m, q)?)],
        Table1Row::Inj => vec![(format!("Inj({m},{q})"), inj(m, q)?)],
        Table1Row::AllQ | Table1Row::AllPq => {
            let params = GraphParams::new(m, q)?;
            let alpha: Vec<Symbol> = (0..m).map(|i| (i % q) as Symbol).collect();
            let smallest = Code::new(params, [Vertex::new(params, alpha)?])?;
            vec![
                ("{(alpha,...,alpha)}".into(), smallest),
                (format!("All({m},{q})"), all_code(m / q, q)?),
            ]
        }
    })
}
