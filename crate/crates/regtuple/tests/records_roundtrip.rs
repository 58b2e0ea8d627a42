use num_bigint::BigInt;
use proptest::prelude::*;
use regtuple::records::{parse, to_text, CheckRecord, Record};
use regtuple_core::congruence::{Claim, Exception};
use regtuple_core::{CongruenceFamily, IndexFilter, Status, Target, TupleSpec, VerificationReport};

fn target() -> impl Strategy<Value = Target> {
    prop_oneof![
        Just(Target::Partitions),
        (2u64..9, 1u64..9).prop_map(|(l, k)| Target::Tuples(TupleSpec::new(l, k).unwrap())),
    ]
}

fn filter() -> impl Strategy<Value = IndexFilter> {
    prop_oneof![
        Just(IndexFilter::All),
        (2u64..50).prop_map(IndexFilter::NotDivisibleBy),
        (2u64..50, 2u64..50).prop_map(|(a, b)| IndexFilter::NotDivisibleByEither(a, b)),
    ]
}

fn claim() -> impl Strategy<Value = Claim> {
    prop_oneof![Just(Claim::Proved), Just(Claim::Conjectural), Just(Claim::Forced)]
}

fn family() -> impl Strategy<Value = CongruenceFamily> {
    (target(), 1u64..1000, 0u64..10_000, 2u64..1 << 40, filter(), claim(), "[ -~\t\n\r%=é]{0,24}").prop_map(
        |(t, a, b, m, f, c, label)| CongruenceFamily::new(t, a, b, m, f, c, label).unwrap(),
    )
}

fn record() -> impl Strategy<Value = Record> {
    prop_oneof![
        family().prop_map(Record::Family),
        (family(), 0u64..500, prop::collection::vec((0u64..500, 1u64..100), 0..5)).prop_map(|(family, n_max, raw)| {
            let exceptions: Vec<Exception> = raw
                .into_iter()
                .enumerate()
                .map(|(i, (index, residue))| Exception { n: i as u64, index, residue })
                .collect();
            let status = if exceptions.is_empty() { Status::Pass } else { Status::Fail };
            Record::Report(VerificationReport { family, n_max, tested: n_max + 1, exceptions, status })
        }),
        (0u64..1 << 20, any::<i128>()).prop_map(|(n, v)| Record::Coefficient { n, value: BigInt::from(v) * BigInt::from(v) - 7 }),
        ("[ -~]{1,12}", "[ -~]{0,12}", any::<bool>(), "[ -~\n]{0,20}")
            .prop_map(|(name, scope, passed, detail)| Record::Check(CheckRecord { name, scope, passed, detail })),
    ]
}

proptest! {
    #[test]
    fn text_round_trips(records in prop::collection::vec(record(), 0..8)) {
        let text = to_text(&records);
        prop_assert!(text.is_empty() || text.ends_with('\n'));
        prop_assert!(!text.contains('\r'));
        prop_assert_eq!(parse(&text).unwrap(), records);
    }
}
