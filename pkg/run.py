import os

from app import create_app

# Commands run through the flask CLI: flask --app run.py solve graph.txt
app = create_app(config_name=os.getenv("MDS_CONFIG_NAME", "local"))
