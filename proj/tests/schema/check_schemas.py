"""Validates CLI-generated protocol fixtures, a manifest and a registry file
against the JSON schemas in schemas/."""

import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema

FIXTURE_SCHEMAS = {
    "health_response.json": "health.schema.json",
    "train_request.json": "train_request.schema.json",
    "train_response.json": "adapter.schema.json",
    "adapter_response.json": "adapter.schema.json",
    "inpaint_request.json": "inpaint_request.schema.json",
    "inpaint_response.json": "inpaint_response.schema.json",
    "error_response.json": "error.schema.json",
}


def load(path):
    return json.loads(pathlib.Path(path).read_text())


def main():
    cli, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])
    schemas = {p.name: load(p) for p in schema_dir.glob("*.schema.json")}
    for schema in schemas.values():
        jsonschema.Draft202012Validator.check_schema(schema)

    def check(doc, name):
        jsonschema.Draft202012Validator(schemas[name]).validate(doc)

    with tempfile.TemporaryDirectory() as tmp:
        tmp = pathlib.Path(tmp)
        subprocess.run([cli, "fixtures", "-o", str(tmp), "--scene-size", "128"], check=True)
        for fixture, schema in FIXTURE_SCHEMAS.items():
            check(load(tmp / "protocol" / fixture), schema)
            print(f"ok {fixture} ~ {schema}")

        manifest = {
            "name": "schema",
            "styvec": "schemavec",
            "params": {"panel_size": 64, "pairing": "disjoint"},
            "exemplars": [
                {"id": "a", "image": str(tmp / "scenes" / "square.png")},
                {"id": "b", "image": str(tmp / "scenes" / "disk.png")},
            ],
            "adapters": {},
        }
        check(manifest, "manifest.schema.json")
        (tmp / "manifest.json").write_text(json.dumps(manifest))
        registry = tmp / "registry.json"
        subprocess.run([cli, "train", "--manifest", str(tmp / "manifest.json"),
                        "--backend-url", "mock", "--mock-registry", str(registry)],
                       check=True, stdout=subprocess.DEVNULL)
        check(load(registry), "registry.schema.json")
        print("ok manifest.json, registry.json")

        bad = dict(manifest, exemplars=manifest["exemplars"][:1])
        try:
            check(bad, "manifest.schema.json")
        except jsonschema.ValidationError:
            print("ok single-exemplar manifest rejected")
        else:
            sys.exit("single-exemplar manifest passed the schema")


if __name__ == "__main__":
    main()
