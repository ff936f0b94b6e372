import json
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

HUMAN_LINES = [
    {"id": "h1", "summary": "The storm closed roads across the north on Monday morning.",
     "input": "A powerful storm closed roads across the north of the country on Monday morning, police said.",
     "architecture": "Human", "test_dataset": "CNN/DailyMail"},
    {"id": "h2", "summary": "The storm closed roads across the north and cut power to thousands.",
     "input": "Thousands lost power as the storm closed roads across the north.",
     "architecture": "Human", "test_dataset": "CNN/DailyMail"},
    {"id": "h3", "summary": "A new survey finds younger voters favour local candidates this year.",
     "input": "Survey results released today show younger voters favour local candidates.",
     "architecture": "Human", "test_dataset": "XSum"},
    {"id": "h4", "summary": "Officials promised answers after the audit of the transit agency.",
     "input": "City officials promised answers after an audit of the transit agency found gaps.",
     "architecture": "Human", "test_dataset": "XSum"},
]

BART_IN_DOMAIN_LINES = [
    {"id": "a1", "summary": "Sign up for our free daily briefing on storms and road closures today.",
     "input": "Storm coverage continues with road closures around the region.",
     "architecture": "BART", "train_dataset": "CNN/DailyMail", "test_dataset": "CNN/DailyMail"},
    {"id": "a2", "summary": "Sign up for our free daily briefing on weather across the north.",
     "input": "More storm reporting from the north.",
     "architecture": "BART", "train_dataset": "CNN/DailyMail", "test_dataset": "CNN/DailyMail"},
    {"id": "a3", "summary": "Voters are being asked about local candidates ahead of this election.",
     "input": "Local election coverage and voter interviews.",
     "architecture": "BART", "train_dataset": "CNN/DailyMail", "test_dataset": "XSum"},
    {"id": "a4", "summary": "The transit audit found significant gaps in spending controls overall.",
     "input": "The audit of the transit agency found significant gaps.",
     "architecture": "BART", "train_dataset": "CNN/DailyMail", "test_dataset": "XSum"},
]

BART_SHIFTED_LINES = [
    {"id": "b1", "summary": "Further research is needed to confirm the extent of the storm damage.",
     "input": "Storm damage across the north was extensive.",
     "architecture": "BART", "train_dataset": "XSum", "test_dataset": "CNN/DailyMail"},
    {"id": "b2", "summary": "Further research is needed to confirm the duration of road closures.",
     "input": "Roads were closed for days after the storm.",
     "architecture": "BART", "train_dataset": "XSum", "test_dataset": "CNN/DailyMail"},
    {"id": "b3", "summary": "Further research is needed to confirm the shift in voter turnout.",
     "input": "Turnout among younger voters rose sharply.",
     "architecture": "BART", "train_dataset": "XSum", "test_dataset": "XSum"},
    {"id": "b4", "summary": "Further research is needed to confirm the findings of the audit.",
     "input": "The transit audit is under review.",
     "architecture": "BART", "train_dataset": "XSum", "test_dataset": "XSum"},
]


def write_jsonl(path: Path, objects) -> Path:
    with path.open("w", encoding="utf-8") as fh:
        for obj in objects:
            fh.write(json.dumps(obj, ensure_ascii=False) + "\n")
    return path


@pytest.fixture
def fixture_corpora(tmp_path):
    """Three small corpus files that together support every command,
    including a full-rank regression with one interaction column."""
    return [
        str(write_jsonl(tmp_path / "humans.jsonl", HUMAN_LINES)),
        str(write_jsonl(tmp_path / "bart_cnn.jsonl", BART_IN_DOMAIN_LINES)),
        str(write_jsonl(tmp_path / "bart_xsum.jsonl", BART_SHIFTED_LINES)),
    ]
