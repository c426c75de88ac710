from vknot.core.config_manager import Config


def main():
    try:
        import uvicorn
    except Exception as e:
        raise SystemExit(f"uvicorn is required to run the API: {e}")

    Config.load()
    uvicorn.run("Api.main:app", host=Config.API_HOST, port=int(Config.API_PORT))


if __name__ == "__main__":
    main()
