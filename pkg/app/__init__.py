import logging

from apiflask import APIFlask
from dotenv import load_dotenv

from .startup_validation import load_settings, log_level

logger = logging.getLogger(__name__)


load_dotenv()


def create_app(config_name: str = "local", environ=None) -> APIFlask:
    settings = load_settings(environ)
    logging.basicConfig(level=log_level(settings))

    app = APIFlask(
        __name__,
        title="Bounded-genus dominating set",
        version="0.1.0",
        enable_openapi=False,
    )
    app.config["CONFIG_NAME"] = config_name
    app.config.update(settings)

    from .commands import register_commands

    register_commands(app)

    logger.debug("Application created", extra={"config_name": config_name, **settings})
    return app


__all__ = ["create_app"]
