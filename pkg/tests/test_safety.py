import pytest

from taco.ingest import Blacklist
from taco.model import Response
from taco.safety import (
    APOLOGY_LINE,
    DANGEROUS_TASK,
    PROFANE,
    PROFESSIONAL_TASK,
    SAFE,
    check_profanity,
    check_task_request,
    scrub_response,
)

BL = Blacklist(
    dangerous_terms=frozenset({"make explosives", "build a bomb"}),
    professional_terms=frozenset({"file a lawsuit", "make explosives"}),
    profanity_terms=frozenset({"darnit", "flipping heck"}),
)


def test_clean_text_is_safe():
    assert check_profanity("let's bake a cake", BL).kind == SAFE


def test_profanity_survives_case_and_punctuation():
    verdict = check_profanity("DARNIT!!!", BL)
    assert verdict.kind == PROFANE
    assert verdict.matched_term == "darnit"
    # punctuation between the phrase words must not defeat the match
    assert check_profanity("Flipping, Heck?", BL).kind == PROFANE


def test_substring_of_longer_word_is_safe():
    assert check_profanity("the darnitol dosage", BL).kind == SAFE


def test_task_request_verdicts():
    assert check_task_request("make explosives at home", BL).kind == DANGEROUS_TASK
    assert check_task_request("file a lawsuit", BL).kind == PROFESSIONAL_TASK
    assert check_task_request("bake bread", BL).kind == SAFE


def test_dangerous_outranks_professional():
    # "make explosives" sits on both lists; dangerous must win
    assert check_task_request("make explosives", BL).kind == DANGEROUS_TASK


def test_scrub_keeps_clean_response():
    resp = Response(speech="All good here. Carry on.")
    assert scrub_response(resp, BL) is resp


def test_scrub_removes_offending_sentence_in_order():
    resp = Response(speech="First part. Well darnit happened. Third part.")
    scrubbed = scrub_response(resp, BL)
    assert scrubbed.speech == "First part. Third part."


def test_scrub_total_removal_falls_back_to_apology():
    resp = Response(speech="darnit.")
    scrubbed = scrub_response(resp, BL)
    assert scrubbed.speech == APOLOGY_LINE
    assert scrubbed.end_session is False


def test_profane_implies_scrub_removes_sentence():
    for term in BL.profanity_terms:
        text = f"Something fine. Then {term} showed up."
        assert check_profanity(text, BL).kind == PROFANE
        scrubbed = scrub_response(Response(speech=text), BL)
        assert term not in scrubbed.speech


@pytest.mark.parametrize("wrapper", ["{}", "{}.", "  {}!", "<<{}>>", "WELL {} WELL"])
def test_verdict_invariant_to_case_and_punctuation(wrapper):
    text = wrapper.format("DaRnIt")
    assert check_profanity(text, BL).kind == PROFANE
