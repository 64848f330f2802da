import pytest

from independence.corpus import (MAX_CORPUS_HOMS, MAX_CORPUS_ORDER,
                                 CorpusFamily, audit_family, build_corpus,
                                 build_corpus_family)

SEED = 20110101


@pytest.fixture(scope="module")
def corpus_audits():
    return [audit_family(entry) for entry in build_corpus(SEED, 500)]


def test_corpus_is_deterministic() -> None:
    first, second = build_corpus_family(SEED, 17), build_corpus_family(SEED, 17)
    assert first.name == second.name
    assert first.family.domain == second.family.domain
    assert [h.table for h in first.family.homs] == [h.table for h in second.family.homs]


def test_corpus_shape() -> None:
    for entry in build_corpus(SEED, 40):
        assert entry.family.domain.order <= MAX_CORPUS_ORDER
        assert 1 <= len(entry.family) <= MAX_CORPUS_HOMS
        assert entry.seed == SEED


def test_criteria_agree_over_corpus(corpus_audits) -> None:
    """
    Test (R), (R1) and (R2) against each other on 500 seeded families.
    """
    assert all(audit.criteria_agree for audit in corpus_audits)
    assert any(audit.satisfies_R for audit in corpus_audits)
    assert not all(audit.satisfies_R for audit in corpus_audits)


def test_lemma2_sound_over_corpus(corpus_audits) -> None:
    assert all(audit.lemma2_sound for audit in corpus_audits)
    assert any(audit.lemma2_applies for audit in corpus_audits)


def test_gamma_prime_maximal_over_corpus(corpus_audits) -> None:
    assert all(audit.gamma_prime_ok for audit in corpus_audits)
    assert all(audit.maximality_checked == (audit.order <= 100) for audit in corpus_audits)


def test_goursat_and_series_over_corpus(corpus_audits) -> None:
    assert all(audit.goursat_ok for audit in corpus_audits)
    assert all(audit.jordan_holder_ok for audit in corpus_audits)
    assert all(audit.jordan_ok for audit in corpus_audits)


def test_frattini_over_corpus(corpus_audits) -> None:
    assert all(audit.frattini_ok for audit in corpus_audits)
    assert sum(audit.frattini_triples for audit in corpus_audits) >= 200


def test_corpus_has_no_findings(corpus_audits) -> None:
    assert [audit.findings for audit in corpus_audits if audit.findings] == []


def test_audit_surfaces_disagreement(mocker, crt_family) -> None:
    """
    Test that a broken criterion ends up in the findings instead of passing.
    """
    mocker.patch("independence.corpus.check_R1", return_value=False)
    audit = audit_family(CorpusFamily(seed=0, index=0, name="crt", family=crt_family))
    assert audit.satisfies_R
    assert not audit.criteria_agree
    assert audit.findings
