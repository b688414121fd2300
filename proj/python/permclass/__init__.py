from ._core import (
    PermclassError,
    aip_to_word,
    ak_series,
    contains_pattern,
    f_series,
    g_series,
    h_series,
    height_profile,
    is_almost_increasing,
    is_x_class,
    path_to_word,
    psi,
    psi_inverse,
    stats,
    theta,
    verify,
    word_to_aip,
    word_to_path,
    word_to_xperm,
    xclass_series,
    xperm_to_word,
)

__version__ = "0.1.0"
