from contextlib import asynccontextmanager

from fastapi import FastAPI
from fastapi.middleware.cors import CORSMiddleware

from Api.routers.diagrams import router as diagrams_router
from Api.routers.health import router as health_router
from vknot.core.config_manager import Config
from vknot.helpers.logger import LOGGER


@asynccontextmanager
async def lifespan(app: FastAPI):
    Config.load()
    LOGGER(__name__).info(f"API ready on {Config.API_HOST}:{Config.API_PORT}")
    yield


app = FastAPI(title="vknot", lifespan=lifespan)


app.add_middleware(
    CORSMiddleware,
    allow_origins=Config.CORS_ORIGINS,
    allow_methods=["*"],
    allow_headers=["*"],
)


app.include_router(health_router)
app.include_router(diagrams_router)
