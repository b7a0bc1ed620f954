# Copyright (c) Microsoft Corporation.
# Licensed under the MIT license.

# importing the modules registers the check groups.
from esscert.checkgroups import (
    essential,
    products,
    properties,
    series,
    spectral,
    structure,
)

__all__ = ["essential", "products", "properties", "series", "spectral", "structure"]
