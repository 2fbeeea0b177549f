import os

from src.main import app  # noqa: F401  (vercel.json rewrites every route here)

# --------------------------
# Local development support only
# --------------------------
if __name__ == "__main__":
    import uvicorn
    port = int(os.environ.get("PORT", 8000))
    uvicorn.run("src.main:app", host="0.0.0.0", port=port, reload=True)
