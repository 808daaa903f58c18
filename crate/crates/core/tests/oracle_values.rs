//! Frozen reference values computed independently of this crate: the
//! weighted Hermite functions from the Rodrigues form in a computer algebra
//! system at 50-digit precision, the transform kernel through complex
//! arithmetic, and the reproducing kernel through exact quaternion series
//! summation. These pin the implementation to external ground truth rather
//! than to itself.

use qsb_core::{
    hermite_h, kernel_a, project, psi_n, reproducing_kernel, GaussHermite, HermiteExpansion,
    ImaginaryUnit, Quaternion, SampledFunction,
};

use num_complex::Complex64;

// (n, x, nu, value)
const HERMITE_TABLE: [(usize, f64, f64, f64); 35] = [
    (0, 0.3, 0.5, 0.9777512371933363639286),
    (0, -0.7, 1.0, 0.7827045382418681677109),
    (0, 1.1, 2.0, 0.2981972794298873779316),
    (0, 0.25, 1.0, 0.9692332344763440818481),
    (0, -1.3, 0.5, 0.6554062543268405127577),
    (1, 0.3, 0.5, 0.2933253711580009091786),
    (1, -0.7, 1.0, -1.095786353538615434795),
    (1, 1.1, 2.0, 1.312068029491504462899),
    (1, 0.25, 1.0, 0.4846166172381720409241),
    (1, -1.3, 0.5, -0.8520281306248926665850),
    (2, 0.3, 0.5, -0.8897536258459360911750),
    (2, -0.7, 1.0, -0.03130818152967472670843),
    (2, 1.1, 2.0, 4.580310212043070125029),
    (2, 0.25, 1.0, -1.696158160333602143234),
    (2, -1.3, 0.5, 0.4522303154855199538028),
    (3, 0.3, 0.5, -0.8535768300697826457097),
    (3, -0.7, 1.0, 4.426976868296006356573),
    (3, 1.1, 2.0, 9.656820697057472846937),
    (3, 0.25, 1.0, -2.786545549119489235313),
    (3, -1.3, 0.5, 1.116156851118609393226),
    (4, 0.3, 0.5, 2.413187828516873479812),
    (4, -0.7, 1.0, -6.009918526436360538951),
    (4, 1.1, 2.0, -12.47371147746396097383),
    (4, 0.25, 1.0, 8.783676187441868241749),
    (4, -1.3, 0.5, -2.807694852910752072603),
    (5, 0.3, 0.5, 4.138263668834192626782),
    (5, -0.7, 1.0, -27.00192900935714609805),
    (5, 1.1, 2.0, -209.3934616537609938358),
    (5, 0.25, 1.0, 26.68420248667684800338),
    (5, -1.3, 0.5, -0.8146240956904598785219),
    (6, 0.3, 0.5, -10.82446004193410961103),
    (6, -0.7, 1.0, 97.90188587746360992678),
    (6, 1.1, 2.0, -671.8570017272691534011),
    (6, 0.25, 1.0, -74.49466063108025841580),
    (6, -1.3, 0.5, 15.09748558895135820509),
];

// (n, x, nu, value), normalized basis
const PSI_TABLE: [(usize, f64, f64, f64); 15] = [
    (0, 0.3, 0.5, 0.6175660413757577114468),
    (0, -0.7, 1.0, 0.5879093724421046224031),
    (0, 1.1, 2.0, 0.2663628834737731790977),
    (1, 0.3, 0.5, 0.1852698124127273134340),
    (1, -0.7, 1.0, -0.5820005855677156449793),
    (1, 1.1, 2.0, 0.5859983436423009940150),
    (2, 0.3, 0.5, -0.3973834734754705392843),
    (2, -0.7, 1.0, -0.008314294079538794928275),
    (2, 1.1, 2.0, 0.7232524844571155984650),
    (3, 0.3, 0.5, -0.2201010049988844556618),
    (3, -0.7, 1.0, 0.4799535030961140196031),
    (3, 1.1, 2.0, 0.4401883924921894696006),
    (4, 0.3, 0.5, 0.3111290323240244702284),
    (4, -0.7, 1.0, -0.2303644737980354465600),
    (4, 1.1, 2.0, -0.1421477931486635559936),
];

#[test]
fn weighted_hermite_matches_the_rodrigues_form() {
    for (n, x, nu, want) in HERMITE_TABLE {
        let got = hermite_h(n, x, nu).unwrap();
        let tol = 1e-14 * want.abs().max(1.0);
        assert!(
            (got - want).abs() <= tol,
            "h({n}, {x}, {nu}) = {got}, reference {want}"
        );
    }
}

#[test]
fn normalized_hermite_matches_reference_values() {
    for (n, x, nu, want) in PSI_TABLE {
        let got = psi_n(n, x, nu).unwrap();
        assert!(
            (got - want).abs() <= 1e-15,
            "psi({n}, {x}, {nu}) = {got}, reference {want}"
        );
    }
}

#[test]
fn transform_kernel_matches_complex_reference_on_every_slice() {
    // (z_q, x, nu, value), computed in C and valid in any slice by symmetry
    let cases = [
        (
            Complex64::new(0.5, 0.75),
            0.3,
            1.0,
            Complex64::new(0.5846280306914052082362, -0.03324377221265819776567),
        ),
        (
            Complex64::new(-1.1, 0.4),
            -0.8,
            2.0,
            Complex64::new(1.58409598171574566482, -0.03976389850656581943502),
        ),
        (
            Complex64::new(0.0, 1.25),
            1.5,
            0.5,
            Complex64::new(0.05146158476504008034138, 0.2058529452785901418272),
        ),
    ];
    let units = [
        ImaginaryUnit::I,
        ImaginaryUnit::J,
        ImaginaryUnit::new(1.0, 1.0, 1.0).unwrap(),
    ];
    for (z, x, nu, want) in cases {
        for unit in units {
            let got = kernel_a(unit.embed(z), x, nu).unwrap();
            let diff = (got - unit.embed(want)).modulus();
            assert!(
                diff <= 1e-15 * want.norm().max(1.0),
                "A({z}; {x}) at nu={nu} on {unit}: off by {diff:e}"
            );
        }
    }
}

#[test]
fn reproducing_kernel_matches_quaternion_reference() {
    let p = Quaternion::new(0.5, 0.25, -0.75, 1.0);
    let q = Quaternion::new(-0.3, 1.1, 0.2, -0.6);
    let want1 = Quaternion::new(
        0.2905976890185310016372,
        -0.6808414900348995338986,
        -0.01248196607491468949394,
        -0.356700091362377548367,
    );
    let want2 = Quaternion::new(
        -1.879115682732340154014,
        -5.286515389600529379987,
        4.379243066007064296703,
        -0.2130216713043245348733,
    );
    let got1 = reproducing_kernel(p, q, 1.0).unwrap();
    let got2 = reproducing_kernel(p, q, 2.0).unwrap();
    assert!(
        (got1 - want1).modulus() <= 1e-13,
        "nu=1: {got1} vs {want1}"
    );
    assert!(
        (got2 - want2).modulus() <= 1e-12 * want2.modulus(),
        "nu=2: {got2} vs {want2}"
    );
}

#[test]
fn projection_recovers_a_two_term_expansion() {
    // e^{-x^2/2} (0.3 + x) is exactly c0 psi_0 + c1 psi_1 at unit weight
    let f = SampledFunction::new(6.0, |x| {
        Quaternion::from_real((-x * x / 2.0).exp() * (0.3 + x))
    });
    let rule = GaussHermite::new(128).unwrap();
    let got: HermiteExpansion = project(&f, 1.0, 6, &rule).unwrap();
    let c0 = 0.3994006091401169138393;
    let c1 = 0.941396263776714812626;
    assert!((got.coeffs()[0].w - c0).abs() <= 1e-13);
    assert!((got.coeffs()[1].w - c1).abs() <= 1e-13);
    for n in 2..=6 {
        assert!(
            got.coeffs()[n].modulus() <= 1e-13,
            "spurious coefficient at n={n}"
        );
    }
    for c in got.coeffs() {
        assert_eq!(c.im_norm(), 0.0, "real input projected to real coefficients");
    }
}
