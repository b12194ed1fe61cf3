from .experiment import SCHEMA_VERSION, ExperimentRecord
from .report import (
    REPORTS,
    BasisReport,
    EncodeReport,
    ErrorReport,
    GraphReport,
    StructuralReport,
    SuiteReport,
    VerdictReport,
    json_schema,
    to_payload,
)
