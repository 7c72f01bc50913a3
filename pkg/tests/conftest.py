import pytest

from concept_ir.ontology import ConceptGraph, load_ontology

DEVICE_TSV = """\
# small device ontology: two senses for mouse
node\tcomputer\tcomputer\tconcept
node\tanimal\tanimal\tconcept
node\tmouse_device\tmouse\tinstance
node\tkeyboard_device\tkeyboard\tinstance
node\tmouse_animal\tmouse\tinstance
edge\tcomputer\thas_part\tmouse_device
edge\tcomputer\thas_part\tkeyboard_device
edge\tanimal\tkind\tmouse_animal
sense\tmouse\tmouse_device
sense\tmouse\tmouse_animal
sense\tkeyboard\tkeyboard_device
"""


@pytest.fixture
def device_path(tmp_path):
    path = tmp_path / "device.tsv"
    path.write_text(DEVICE_TSV, encoding="utf-8")
    return path


@pytest.fixture
def device_graph(device_path) -> ConceptGraph:
    return load_ontology(device_path)


def write_jsonl(path, docs):
    import json

    with open(path, "w", encoding="utf-8") as fh:
        for doc_id, text in docs:
            fh.write(json.dumps({"id": doc_id, "text": text}, ensure_ascii=False) + "\n")
    return path


# one verdict line per acceptance criterion, repeated at the end of the run
VERDICTS: list = []


@pytest.fixture
def verdict(capsys):
    def record(criterion, ok, detail):
        line = f"[criterion {criterion:>2}] {'PASS' if ok else 'FAIL'}: {detail}"
        VERDICTS.append(line)
        with capsys.disabled():
            print("\n" + line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if VERDICTS:
        terminalreporter.section("acceptance criteria")
        for line in sorted(VERDICTS):
            terminalreporter.write_line(line)
