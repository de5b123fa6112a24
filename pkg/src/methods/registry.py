from typing import Dict, List, Tuple, Type

from src.methods.base_method import Method
from src.methods.leibniz_method import LeibnizMethod
from src.methods.arctan_methods import (
    ArcBitMethod,
    CorrectedMethod,
    SeriesMethod,
    TransformedMethod,
)
from src.methods.trig_methods import SineMethod, VersineMethod
from src.precision.errors import ConfigError

METHODS: Dict[str, Type[Method]] = {
    cls.name: cls
    for cls in (
        ArcBitMethod,
        SeriesMethod,
        CorrectedMethod,
        TransformedMethod,
        LeibnizMethod,
        SineMethod,
        VersineMethod,
    )
}


def method_names() -> List[str]:
    return list(METHODS)


def get_method(name: str) -> Method:
    """Factory: fresh estimator instance for a method name."""
    try:
        return METHODS[name]()
    except KeyError:
        raise ConfigError(
            f"Unknown method '{name}'. Choose from: {', '.join(METHODS)}"
        ) from None


def split_method_spec(spec: str) -> Tuple[str, Dict[str, str]]:
    """'corrected:cf3' -> ('corrected', {'rule': 'cf3'}); other names pass through."""
    name, _, rule = spec.strip().partition(":")
    if name not in METHODS:
        raise ConfigError(f"Unknown method '{name}'. Choose from: {', '.join(METHODS)}")
    if rule and name != "corrected":
        raise ConfigError(f"Only corrected takes a rule suffix, got '{spec}'")
    return name, ({"rule": rule} if rule else {})
