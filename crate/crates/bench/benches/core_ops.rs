use criterion::{black_box, criterion_group, criterion_main, Criterion};

use twobridge::bridge::{phi, phi_inverse_knot};
use twobridge::oracle::{search_double_parsing, SearchBudget};
use twobridge::order::{assemble_form, construct_upper_bound, std_forms};
use twobridge::parsing::parse;
use twobridge::rational::even_expansion;
use twobridge::words::class_of;
use twobridge::{ExpandedWord, Fraction};

fn example_triple() -> (ExpandedWord, ExpandedWord, ExpandedWord) {
    let w = |e: &[i8]| ExpandedWord::new(e.to_vec()).unwrap();
    (
        w(&[2, -2, 0, -2]),
        w(&[2, -2, 0, -2, 2, -2, 0, -2]),
        w(&[
            2, -2, 0, -2, 2, -2, 0, -2, 2, 2, 0, 2, -2, 2, 0, 2, -2, -2, 0, -2, 2, -2, 0, -2, 2,
            -2, 0, -2,
        ]),
    )
}

fn bench_expansion(c: &mut Criterion) {
    let f = Fraction::from_i64(322892, 551327).unwrap();
    c.bench_function("even_expansion 322892/551327", |b| {
        b.iter(|| even_expansion(black_box(&f)))
    });
}

fn bench_parse(c: &mut Criterion) {
    let (a, _, cw) = example_triple();
    c.bench_function("parse 28-entry word", |b| {
        b.iter(|| parse(black_box(&cw), black_box(&a)))
    });
}

fn bench_phi_round_trip(c: &mut Criterion) {
    let (_, _, cw) = example_triple();
    c.bench_function("phi + inverse on 28-entry word", |b| {
        b.iter(|| {
            let k = phi(black_box(&cw));
            phi_inverse_knot(&k).unwrap()
        })
    });
}

fn bench_std_forms(c: &mut Criterion) {
    let a = assemble_form(&[], 2, 2, 8).unwrap();
    c.bench_function("std_forms 16 twos", |b| b.iter(|| std_forms(black_box(&a))));
}

fn bench_construction(c: &mut Criterion) {
    let k1 = phi(&assemble_form(&[], 2, 2, 1).unwrap());
    let k2 = phi(&assemble_form(&[], 2, 2, 2).unwrap());
    c.bench_function("construct_upper_bound figure-eight pair", |b| {
        b.iter(|| construct_upper_bound(black_box(&[k1.clone(), k2.clone()])).unwrap())
    });
}

fn bench_oracle(c: &mut Criterion) {
    let trefoil = class_of(&ExpandedWord::new(vec![2, -2]).unwrap());
    let fig8 = class_of(&ExpandedWord::new(vec![2, 2]).unwrap());
    let budget = SearchBudget {
        max_word_length: 20,
        ..SearchBudget::default()
    };
    c.bench_function("oracle sweep trefoil/figure-eight to length 20", |b| {
        b.iter(|| search_double_parsing(black_box(&trefoil), black_box(&fig8), &budget))
    });
}

criterion_group!(
    benches,
    bench_expansion,
    bench_parse,
    bench_phi_round_trip,
    bench_std_forms,
    bench_construction,
    bench_oracle
);
criterion_main!(benches);
