import json

import pytest

import humor


@pytest.fixture(scope="module")
def joke():
    fx = humor.fixture("14")
    lex = humor.Lexicon.from_text(fx["lexicon"])
    model = humor.BigramModel.from_text(fx["model"])
    text = humor.parse_texts(fx["text"])[0]
    return lex, model, text


def test_joke_retraction_fires_once(joke):
    lex, model, text = joke
    events = humor.run_events(model, lex, text, tau=2)
    humor_events = [e for e in events if e["type"] == "humor"]
    assert len(humor_events) == 1
    assert humor_events[0]["t"] == text.index("leg")
    assert humor_events[0]["old"] == ["box"]
    assert humor_events[0]["new"] == ["breast"]


def test_unbounded_tau_matches_viterbi(joke):
    lex, model, text = joke
    events = humor.run_events(model, lex, text, tau=None)
    assert not any(e["type"] == "humor" for e in events)

    state = humor.DecoderState()
    humor.run_text(model, lex, text, tau=None, state=state)
    columns = [lex.senses(s) for s in text]
    best, _ = humor.exact_viterbi(model, columns)
    assert list(state.committed) == list(best)


def test_suppression_silences_second_pass(joke):
    lex, model, text = joke
    state = humor.DecoderState()
    first = humor.run_text(model, lex, text, suppress=True, state=state)
    second = humor.run_text(model, lex, text, suppress=True, state=state)
    count = lambda lines: sum(json.loads(l)["type"] == "humor" for l in lines)
    assert count(first) == 1
    assert count(second) == 0


def test_trace_is_deterministic(joke):
    lex, model, text = joke
    assert humor.run_text(model, lex, text) == humor.run_text(model, lex, text)


def test_simonov_signs():
    assert humor.simonov(2.0, 0.9, 0.5) == pytest.approx(0.8)
    assert humor.simonov(1.0, 0.2, 0.5) < 0
    assert humor.simonov(1.0, 0.5, 0.5) == 0


def test_merge_repetitions():
    assert humor.merge_repetitions(["cow", "cow", "cow"]) == ["cow"]
    assert humor.merge_repetitions(["a", "b", "b", "a"]) == ["a", "b", "a"]


def test_nullify_releases_energy():
    net = humor.SpinNetwork.make(4, seed=7)
    report = humor.nullify(net, field_strength=1.0, max_sweeps=10, routing_rho=0.5)
    assert report.final_all_down
    assert report.energy_to_reservoir == pytest.approx(8.0)
    assert report.motor_share + report.limbic_share == pytest.approx(
        report.energy_to_reservoir
    )


def test_cow_fixture_enlarges_to_cow():
    fx = humor.fixture("cow")
    model = humor.BigramModel.from_text(fx["model"])
    assoc = humor.AssociationMap.from_text(fx["assoc"])
    primary = humor.parse_texts(fx["text"])[0]
    columns, bias = humor.enlarge(primary, assoc, 2.0)
    best, _ = humor.exact_viterbi(model, columns, bias=bias)
    assert humor.merge_repetitions(best) == ["cow"]


def test_race_verdict_present():
    fx = humor.fixture("race")
    lex = humor.Lexicon.from_text(fx["lexicon"])
    model = humor.BigramModel.from_text(fx["model"])
    assoc = humor.AssociationMap.from_text(fx["assoc"])
    excl = humor.ExclusionList.from_text(fx["exclusions"])
    text = humor.parse_texts(fx["text"])[0]
    lines, first = humor.run_two_channels(
        text, lex, model, assoc, excl, rate1=3, rate2=1, jitter=0, tau1=1, tau2=0
    )
    assert first == "primary"
    assert any(json.loads(l)["type"] == "verdict" for l in lines)
