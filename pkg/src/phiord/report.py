"""Row container shared by the CLI commands and the verification suites."""

from dataclasses import dataclass, field

KINDS = ("totient_table", "order_table", "trace", "coset", "verify")
STATUSES = ("ok", "violated", "error")


@dataclass(frozen=True)
class ReportRow:
    """One machine-readable result row: what ran, on what, what came out."""

    kind: str
    inputs: dict
    outputs: dict
    status: str = "ok"

    def as_obj(self):
        return {"kind": self.kind, "inputs": self.inputs,
                "outputs": self.outputs, "status": self.status}
