"""HTTP service layer: FastAPI app and its request/response models."""

__all__ = ["app", "create_app"]


def __getattr__(name):
    # Import lazily so the core library works without fastapi installed.
    if name in __all__:
        from .app import app, create_app
        return {"app": app, "create_app": create_app}[name]
    raise AttributeError(name)
