//! Identity checks shared by the property tests and the acceptance runner.
//! Each returns `Err` with a description of the first mismatch.

#![allow(dead_code)]

use krawtchouk::combinatorics::{beta, gamma, gauss, sigma, Base};
use krawtchouk::homogeneous::lemmas::{delta_closed, delta_sum, epsilon_closed, epsilon_sum};
use krawtchouk::homogeneous::{b_derivative, b_product, binv_derivative, evaluate, mu_family, nu_family, HomPoly};
use krawtchouk::scalar::{self, int, neg_one_pow};
use num_rational::BigRational;
use num_traits::One;

pub type Check = Result<(), String>;

pub const BASES: [i64; 4] = [-3, -2, 2, 3];

pub fn base(b: i64) -> Base {
    Base::from_int(b).unwrap()
}

fn eq(what: &str, lhs: &BigRational, rhs: &BigRational) -> Check {
    if lhs == rhs {
        Ok(())
    } else {
        Err(format!("{what}: {} != {}", scalar::format(lhs), scalar::format(rhs)))
    }
}

/// Coefficientwise equality at each `lambda`, treating coefficients past a
/// polynomial's degree as zero.
pub fn same(what: &str, a: &HomPoly, b: &HomPoly, lambdas: impl IntoIterator<Item = i64> + Clone) -> Check {
    let top = a.degree().max(b.degree());
    for l in lambdas {
        for u in 0..=top {
            eq(&format!("{what} at u={u}, lambda={l}"), &a.coeff(u, l), &b.coeff(u, l))?;
        }
    }
    Ok(())
}

fn sum_all(degree: usize, terms: Vec<HomPoly>) -> HomPoly {
    terms.iter().fold(HomPoly::from_coeffs(vec![int(0); degree + 1]), |acc, t| &acc + t)
}

pub const LAMBDAS: std::ops::RangeInclusive<i64> = -2..=6;

// b-combinatorics

pub fn symmetry_and_swap(b: &Base, x: i64, k: i64, i: i64) -> Check {
    eq("symmetry", &gauss(x, k, b), &gauss(x, x - k, b))?;
    eq("swap", &(gauss(x, i, b) * gauss(x - i, k, b)), &(gauss(x, k, b) * gauss(x - k, i, b)))
}

pub fn product_sum_expansions(b: &Base, x: i64, y: &BigRational) -> Check {
    let prod: BigRational = (0..x).map(|i| y - b.pow(i)).product();
    let expanded: BigRational = (0..=x)
        .map(|k| neg_one_pow(x - k) * b.pow(sigma(x - k)) * gauss(x, k, b) * scalar::pow(y, k))
        .sum();
    eq("sum to product", &prod, &expanded)?;
    let folded: BigRational = (0..=x)
        .map(|k| gauss(x, k, b) * (0..k).map(|i| y - b.pow(i)).product::<BigRational>())
        .sum();
    eq("product to sum", &folded, &scalar::pow(y, x))
}

pub fn inversion_delta(b: &Base, i: i64, j: i64) -> Check {
    let s: BigRational = (i..=j)
        .map(|k| neg_one_pow(k - i) * b.pow(sigma(k - i)) * gauss(k, i, b) * gauss(j, k, b))
        .sum();
    eq("inversion", &s, &int((i == j) as i64))
}

/// The five Pascal-type recurrences, for `1 <= k <= x`.
pub fn pascal(b: &Base, x: i64, k: i64) -> Check {
    let g = gauss(x, k, b);
    let one = BigRational::one();
    eq("pascal 1", &g, &(gauss(x - 1, k, b) + b.pow(x - k) * gauss(x - 1, k - 1, b)))?;
    eq("pascal 2", &g, &(gauss(x - 1, k - 1, b) + b.pow(k) * gauss(x - 1, k, b)))?;
    eq("pascal 3", &g, &((b.pow(x - k + 1) - &one) / (b.pow(k) - &one) * gauss(x, k - 1, b)))?;
    if k < x {
        eq("pascal 4", &g, &((b.pow(x) - &one) / (b.pow(x - k) - &one) * gauss(x - 1, k, b)))?;
    }
    eq("pascal 5", &g, &((b.pow(x) - &one) / (b.pow(k) - &one) * gauss(x - 1, k - 1, b)))
}

/// For `0 <= k <= x`.
pub fn beta_lemma(b: &Base, x: i64, k: i64) -> Check {
    let ku = k as u32;
    eq("beta split", &beta(x, ku, b), &(gauss(x, k, b) * beta(k, ku, b)))?;
    eq(
        "beta factorial",
        &beta(x, x as u32, b),
        &(gauss(x, k, b) * beta(k, ku, b) * beta(x - k, (x - k) as u32, b)),
    )?;
    eq("beta step", &(beta(x, ku, b) * beta(x - k, 1, b)), &beta(x, ku + 1, b))
}

pub fn gamma_lemma(b: &Base, c: &BigRational, x: i64, k: u32) -> Check {
    let direct = b.pow(sigma(k as i64)) * (0..k as i64).map(|i| c * b.pow(x - i) - int(1)).product::<BigRational>();
    eq("gamma factored", &gamma(x, k, b, c), &direct)?;
    eq(
        "gamma diagonal step",
        &gamma(x + 1, k + 1, b, c),
        &((c * b.pow(x + 1) - int(1)) * b.pow(k as i64) * gamma(x, k, b, c)),
    )?;
    eq("gamma step", &gamma(x, k + 1, b, c), &((c * b.pow(x) - b.pow(k as i64)) * gamma(x, k, b, c)))
}

// Homogeneous polynomial algebra

pub fn leibniz_b(b: &Base, f: &HomPoly, g: &HomPoly, phi: usize) -> Check {
    let (r, s) = (f.degree(), g.degree());
    let lhs = b_derivative(&b_product(f, g, b), phi, b);
    if phi > r + s {
        return same("b-Leibniz past degree", &lhs, &HomPoly::zero(), LAMBDAS);
    }
    let terms = (0..=phi)
        .filter(|&l| l <= r && phi - l <= s)
        .map(|l| {
            let factor = gauss(phi as i64, l as i64, b) * b.pow(((phi - l) * (r - l)) as i64);
            b_product(&b_derivative(f, l, b), &b_derivative(g, phi - l, b), b).scale(&factor)
        })
        .collect();
    same("b-Leibniz", &lhs, &sum_all(r + s - phi, terms), LAMBDAS)
}

pub fn leibniz_binv(b: &Base, f: &HomPoly, g: &HomPoly, phi: usize) -> Check {
    let (r, s) = (f.degree(), g.degree());
    let lhs = binv_derivative(&b_product(f, g, b), phi, b);
    if phi > r + s {
        return same("b^-1-Leibniz past degree", &lhs, &HomPoly::zero(), LAMBDAS);
    }
    let terms = (0..=phi)
        .filter(|&l| l <= r && phi - l <= s)
        .map(|l| {
            let factor = gauss(phi as i64, l as i64, b) * b.pow(l as i64 * (s as i64 - phi as i64 + l as i64));
            let shifted = binv_derivative(g, phi - l, b).shift_lambda(-(l as i64));
            b_product(&binv_derivative(f, l, b), &shifted, b).scale(&factor)
        })
        .collect();
    same("b^-1-Leibniz", &lhs, &sum_all(r + s - phi, terms), LAMBDAS)
}

/// The four derivative closed forms of the fundamental families, `phi <= k`.
pub fn derivative_closed_forms(b: &Base, c: &BigRational, k: usize, phi: usize) -> Check {
    let bk = beta(k as i64, phi as u32, b);
    same(
        "mu b-derivative",
        &b_derivative(&mu_family(k, b, c), phi, b),
        &mu_family(k - phi, b, c).scale(&bk),
        LAMBDAS,
    )?;
    same("nu b-derivative", &b_derivative(&nu_family(k, b), phi, b), &nu_family(k - phi, b).scale(&bk), LAMBDAS)?;
    let (b2, c2, bk2) = (b.clone(), c.clone(), bk.clone());
    let phi64 = phi as i64;
    let expected = mu_family(k - phi, b, c)
        .shift_lambda(-phi64)
        .scale_by(move |l| b2.pow(-sigma(phi64)) * &bk2 * gamma(l, phi as u32, &b2, &c2));
    same("mu b^-1-derivative", &binv_derivative(&mu_family(k, b, c), phi, b), &expected, LAMBDAS)?;
    same(
        "nu b^-1-derivative",
        &binv_derivative(&nu_family(k, b), phi, b),
        &nu_family(k - phi, b).scale(&(neg_one_pow(phi64) * bk)),
        LAMBDAS,
    )
}

/// `nu^[j](l)(1, 1) = beta(j, j) delta_{jl}` for `l <= j`.
pub fn nu_evaluation(b: &Base, j: usize, l: usize) -> Check {
    let v = evaluate(&b_derivative(&nu_family(j, b), l, b), &int(1), &int(1), 0);
    let expected = if j == l { beta(j as i64, j as u32, b) } else { int(0) };
    eq(&format!("nu^[{j}]({l})(1,1)"), &v, &expected)
}

/// `(rho * mu^[s])(1, 1; lambda) = (c b^lambda)^s rho(1, 1; lambda)`.
pub fn mu_evaluation(b: &Base, c: &BigRational, rho: &HomPoly, s: usize, lambda: i64) -> Check {
    let one = int(1);
    let lhs = evaluate(&b_product(rho, &mu_family(s, b, c), b), &one, &one, lambda);
    let rhs = scalar::pow(&(c * b.pow(lambda)), s as i64) * evaluate(rho, &one, &one, lambda);
    eq("rho * mu^[s] at (1,1)", &lhs, &rhs)
}

pub fn delta_lemma(b: &Base, c: &BigRational, lambda: i64, phi: u32, j: u32) -> Check {
    eq(
        &format!("delta({lambda},{phi},{j})"),
        &delta_sum(lambda, phi, j, b, c),
        &delta_closed(lambda, phi, j, b, c),
    )
}

pub fn epsilon_lemma(b: &Base, cap_lambda: i64, phi: i64, i: i64) -> Check {
    eq(
        &format!("epsilon({cap_lambda},{phi},{i})"),
        &epsilon_sum(cap_lambda, phi, i, b),
        &epsilon_closed(cap_lambda, phi, i, b),
    )
}
