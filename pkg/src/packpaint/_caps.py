import os

ENV_VAR = "PACKPAINT_SCALE_CAP"


def scale_cap(default: int) -> int:
    """Soft size cap, overridden globally by ``PACKPAINT_SCALE_CAP``.

    Raising the cap may make runs slow, never incorrect.
    """
    raw = os.environ.get(ENV_VAR)
    if not raw:
        return default
    try:
        return int(raw)
    except ValueError:
        return default
