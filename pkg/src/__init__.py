"""정규 평면 람다 항과 루트 평면 지도."""
