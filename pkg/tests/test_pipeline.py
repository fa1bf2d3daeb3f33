from fractions import Fraction

import pytest

import themegraph as tg
from helpers import make_taxonomy


def test_defaults_match_reference_operating_point():
    cfg = tg.RunConfig()
    assert cfg.depth == 5
    assert cfg.profile == "specific_heavy"
    assert cfg.combiner == "sum"
    assert cfg.exclusive_policy == "keep"
    assert cfg.ngram_max == 3
    assert cfg.max_themes == 6
    assert cfg.distance_tolerance == 0
    assert cfg.keyword_mode == "max_distance"
    assert cfg.ngram_priority is True


@pytest.mark.parametrize(
    "field,value",
    [
        ("depth", 0),
        ("ngram_max", 0),
        ("max_themes", 0),
        ("distance_tolerance", -1),
        ("alpha", 2),
        ("attenuation", 1),
        ("profile", "heavy"),
        ("combiner", "avg"),
        ("exclusive_policy", "halve"),
        ("keyword_mode", "all"),
        ("depth", 2.5),
        ("ngram_priority", "yes"),
    ],
)
def test_config_errors_name_the_field(field, value):
    with pytest.raises(tg.ConfigError, match=field):
        tg.RunConfig(**{field: value})


def test_from_dict_rejects_unknown_fields():
    with pytest.raises(tg.ConfigError, match="profondeur"):
        tg.RunConfig.from_dict({"profondeur": 5})


def test_from_dict_overrides_and_coerces():
    cfg = tg.RunConfig.from_dict({"depth": 3, "alpha": 0.5, "combiner": "weighted_sum"})
    assert cfg.depth == 3
    assert cfg.alpha == Fraction(1, 2)
    assert cfg.combiner == "weighted_sum"


def test_extraction_on_worked_example(mouse_keyboard_taxonomy, mouse_keyboard_doc):
    result = tg.extract_document(mouse_keyboard_doc, mouse_keyboard_taxonomy)
    assert [t.node for t in result.themes] == ["Informatique"]
    assert result.themes[0].flow == Fraction(6)
    assert {(k.node, k.distance) for k in result.keywords} == {("souris", 3), ("clavier", 3)}
    assert result.ignored_word_graphs == 0


def test_empty_document_gives_empty_result(mouse_keyboard_taxonomy):
    result, graph = tg.extract_with_graph("", mouse_keyboard_taxonomy)
    assert result == tg.ExtractionResult((), (), 0)
    assert graph is None


def test_unmatched_document_gives_empty_result(mouse_keyboard_taxonomy):
    result = tg.extract_document("rien de connu ici", mouse_keyboard_taxonomy)
    assert result.themes == ()
    assert result.keywords == ()


def test_repetition_reinforces_relations(mouse_keyboard_taxonomy):
    # sensitivity of the keep-repeats decision: a repeated word doubles the
    # support and weight of its own branch
    once, g_once = tg.extract_with_graph("la souris", mouse_keyboard_taxonomy)
    twice, g_twice = tg.extract_with_graph("la souris et la souris", mouse_keyboard_taxonomy)
    key = ("Dispositif_de_pointage", "souris")
    assert g_once.edges[key].weight == Fraction(5)
    assert g_once.edges[key].support == 1
    assert g_twice.edges[key].weight == Fraction(10)
    assert g_twice.edges[key].support == 2
    assert once.themes  # both still produce themes
    assert twice.themes


def test_ngram_priority_drops_disconnected_word(mouse_keyboard_taxonomy):
    edges = [
        ("Mathématiques", "Géométrie"),
        ("Géométrie", "Triangle"),
        ("Botanique", "Fleur"),
    ]
    lexicon = {
        "théorème de pythagore": {"Triangle"},
        "triangle": {"Triangle"},
        "rosier": {"Fleur"},
    }
    taxonomy = make_taxonomy(edges, lexicon)
    result, graph = tg.extract_with_graph(
        "Le théorème de Pythagore et le rosier.", taxonomy
    )
    assert result.ignored_word_graphs == 1
    assert "Fleur" not in graph.nodes
    no_priority = tg.RunConfig(ngram_priority=False)
    result2, graph2 = tg.extract_with_graph(
        "Le théorème de Pythagore et le rosier.", taxonomy, no_priority
    )
    assert result2.ignored_word_graphs == 0
    assert "Fleur" in graph2.nodes


def test_profile_choice_changes_selected_theme(mouse_keyboard_taxonomy, mouse_keyboard_doc):
    # the generic-heavy reading of the weighting moves all the flow to the
    # root; the default specific-heavy profile is what reproduces the
    # mouse/keyboard quantities
    generic = tg.RunConfig(profile="generic_heavy")
    result = tg.extract_document(mouse_keyboard_doc, mouse_keyboard_taxonomy, generic)
    assert [t.node for t in result.themes] == ["Science"]


def test_keywords_grouped_per_theme_order(mouse_keyboard_taxonomy, mouse_keyboard_doc):
    result = tg.extract_document(mouse_keyboard_doc, mouse_keyboard_taxonomy)
    for keyword in result.keywords:
        assert keyword.theme in {t.node for t in result.themes}
