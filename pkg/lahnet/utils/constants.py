# Exit codes shared by every CLI command
EXIT_CODES = {
    "OK": 0,
    "FALSIFIED": 1,
    "USAGE": 2,
    "GUARD": 3,
    "INTERNAL": 4,
}

OUTPUT_FORMATS = {
    "TEXT": "text",
    "JSON": "json",
    "CSV": "csv",
    "DOT": "dot",
}

# Structured vertex ids of the layered networks
SOURCE_ID = "a{row}"
SINK_ID = "b{row}"
GRID_ID = "u[{row},{col}]"

SOURCE_LABEL = "a_{row}"
SINK_LABEL = "b_{row}"
GRID_LABEL = "u_{{{row},{col}}}"

# Random source for variation sampling
GENERATOR_NAME = "numpy.PCG64"

# numpy draws integers within int64
MAX_ENTRY_BOUND = 2**63 - 1
