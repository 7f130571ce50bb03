from sqlalchemy import text

from . import db


def create_tables(engine):
    with engine.begin() as conn:
        conn.execute(text("""
        CREATE TABLE IF NOT EXISTS kl_polynomials (
            kind TEXT NOT NULL,
            lie TEXT NOT NULL,
            x TEXT NOT NULL,
            w TEXT NOT NULL,
            coeffs TEXT NOT NULL,
            PRIMARY KEY (kind, lie, x, w)
        )"""))


if __name__ == "__main__":
    engine = db.get_engine()
    if engine is None:
        raise Exception("COMATHER_CACHE_DIR environment variable not set")
    create_tables(engine)
    print("✅ Tables created successfully")
