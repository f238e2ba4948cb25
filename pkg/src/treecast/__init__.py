"""treecast: optimal broadcast and cover numbers on structured trees.

Three quantities on a tree: the best independent broadcast (every
broadcaster hears only itself), the best packing (nobody hears two
broadcasters), and the smallest layered cover (every radius-k ball holds k
tokens). The package computes them in closed form on perfect k-ary trees,
spiders, caterpillars and double spiders, builds explicit optimal witnesses,
verifies matched packing/cover pairs as optimality certificates, and
cross-checks everything against exhaustive oracles on small instances.
"""

from .errors import (
    BadParamError,
    InvalidBroadcastError,
    IsCaterpillarError,
    NotACaterpillarError,
    NotATreeError,
    ParseError,
    TooLargeError,
    TreecastError,
    UnsupportedRangeError,
    VertexOutOfRangeError,
)
from .constructions import (
    build_alpha,
    build_certificate,
    build_cover,
    build_packing,
)
from .families import (
    Caterpillar,
    DoubleSpider,
    LabeledTree,
    PerfectKAry,
    Spider,
    gen_caterpillar,
    gen_double_spider,
    gen_perfect_kary,
    gen_spider,
    generate,
    parse_spec,
    spec_is_caterpillar,
    spec_to_dict,
)
from .formulas import (
    alpha_b_binary,
    alpha_b_kary,
    alpha_b_spider,
    closed_form_value,
    pbmc_binary,
    pbmc_caterpillar,
    pbmc_double_spider,
    pbmc_kary,
    pbmc_spider,
)
from .model import (
    Broadcast,
    Certificate,
    TokenSet,
    broadcasters,
    certificate_from_dict,
    certificate_to_dict,
    check_certificate,
    certificate_problems,
    hearers,
    is_dominating,
    is_independent,
    is_multicover,
    is_packing,
    is_packing_pairwise,
    is_valid,
    weight,
)
from .oracle import OracleResult, alpha_b_exact, alpha_b_tiny, max_independent_set, mc_exact, pb_exact
from .tree import (
    Tree,
    build_tree,
    format_edge_list,
    is_caterpillar,
    parse_edge_list,
    random_tree,
    read_edge_list,
    write_edge_list,
)

__version__ = "0.1.0"
