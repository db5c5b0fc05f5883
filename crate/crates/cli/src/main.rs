fn main() {
    println!("atomo");
}
