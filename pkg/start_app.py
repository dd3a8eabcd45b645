#!/usr/bin/env python
"""
Startup script for the expinterp HTTP service
"""
import sys

import uvicorn

from app.config import settings

HOST, PORT = "0.0.0.0", 8000

if __name__ == "__main__":
    base = f"http://localhost:{PORT}"
    print(f"{settings.APP_NAME} ({settings.ENV}), default request precision "
          f"{settings.API_PRECISION_BITS} bits")
    print(f"   - docs:   {base}/docs")
    print(f"   - health: {base}{settings.API_V1_PREFIX}/health")

    try:
        uvicorn.run(
            "app.main:app",
            host=HOST,
            port=PORT,
            reload=settings.ENV == "dev",
            log_level=settings.LOG_LEVEL.lower(),
        )
    except KeyboardInterrupt:
        sys.exit(0)
    except Exception as e:
        print(f"error starting server: {e}")
        sys.exit(1)
