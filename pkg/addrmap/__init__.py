from addrmap.memory_kind import Field, MemoryKind, HBM, DDR4, MEMORY_KINDS, get_memory_kind
from addrmap.mapping_policy import (
    DecodedAddress,
    MappingPolicy,
    POLICY_LAYOUTS,
    DEFAULT_POLICY,
    parse_layout,
    list_policies,
    get_policy,
    default_policy,
    policy_sort_key,
)
from addrmap.decode import decode
from addrmap.encode import encode
from addrmap.field_layout import field_layout
